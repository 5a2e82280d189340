"""
The A2 example
==============

The same machinery for A2: characters from G, and the zero-weight
function checked against Freudenthal.
"""
from weightgen import A2, freudenthal_mult, weyl_character
from weightgen.genfunc_a2 import char_gf_a2_expand, zero_weight_gf_a2

chars = char_gf_a2_expand(3)
print("chi_11 =", chars[(1, 1)])
print("matches Weyl:", all(chi == weyl_character(A2, r) for r, chi in chars.items()))

gf = zero_weight_gf_a2()
s = gf.series(12)
print("A_00 =", gf)
print([s.coeff(k, k) for k in range(7)])
print([freudenthal_mult(A2, (k, k), (0, 0)) for k in range(7)])
