"""
Generating functions for low-lying weights
==========================================

A(m, n) has a closed form with removable factors, a reduced form over
(1-t1^2)^2 (1-t2^2)(1-t2), and can be read off the master function H.
All three agree, and expanding any of them gives multiplicities.
"""
from weightgen import C2, freudenthal_mult, rational_equal
from weightgen.genfunc_c2 import a_closed_raw, a_from_h, a_simplified, appendix_table, mult_via_gf

for (m, n), r in sorted(appendix_table().items()):
    same = rational_equal(r, a_simplified(m, n)) and rational_equal(r, a_from_h(m, n))
    print(f"A_{m}{n} = {r}   {'ok' if same else 'MISMATCH'}")

print()
print("raw closed form, A_53:", a_closed_raw(5, 3))
print("reduced form agrees:", rational_equal(a_closed_raw(5, 3), a_simplified(5, 3)))

# a coefficient is a multiplicity
print("mu_{3,1}(1,0) =", mult_via_gf(1, 0, 3, 1), "=", freudenthal_mult(C2, (3, 1), (1, 0)))
