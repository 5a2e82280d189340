"""
Counting multiplicities
=======================

Telescoping the first recurrence turns a multiplicity into a count of
lattice points (p-2i, q-j) whose representation contains the weight.
The border formulas give the outer ring of a diagram in closed form.
"""
from weightgen import C2, freudenthal_mult
from weightgen.recurrences import (border_mults, counting_rule_mult, epsilon_indicator, rec2_residual,
                                   y_indicator)

p, q, m, n = 10, 5, 2, 1
points = [(pp, qq) for pp in range(p, -1, -2) for qq in range(q, -1, -1) if y_indicator(pp, qq, m, n)]
print(f"mu_{{{p},{q}}}({m},{n}): {len(points)} points ->", counting_rule_mult(p, q, m, n),
      "freudenthal:", freudenthal_mult(C2, (p, q), (m, n)))

# the second recurrence along the left edge of R(10, 9)
for n in range(0, 8):
    e = epsilon_indicator(10, 9, 0, n)
    print(f"n={n}: residual {rec2_residual(10, 9, 0, n):>2}  X={e.X} Y={e.Y} Z={e.Z}")

b = border_mults(12, 4)
for k, vals in sorted(b.by_formula.items()):
    print(f"formula {k}:", dict(sorted((tuple(w), v) for w, v in vals.items())))
print("conflicts:", b.conflicts())
