"""
Zero-weight multiplicities of C2
================================

Three routes to the multiplicity of the zero weight in R(p, q): the
rational generating function, its closed form, and Freudenthal.
"""
from weightgen import C2, freudenthal_mult
from weightgen.genfunc_c2 import zero_weight_closed_form, zero_weight_gf_c2

gf = zero_weight_gf_c2()
print("A_00 =", gf)

series = gf.series(20)
print("\n p\\q" + "".join(f"{q:>5}" for q in range(10)))
for p in range(0, 11):
    print(f"{p:>4}" + "".join(f"{series.coeff(p, q):>5}" for q in range(10)))

# odd p never contains the zero weight
for p, q in [(10, 5), (10, 9), (7, 3)]:
    print(f"R({p},{q}):", series.coeff(p, q), zero_weight_closed_form(p, q),
          freudenthal_mult(C2, (p, q), (0, 0)))
