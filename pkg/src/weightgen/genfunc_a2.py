"""The A2 example: fundamental characters, G, and the zero-weight function."""
from __future__ import annotations

from .exact_series import T1, T2, LaurentPoly2, MultiPoly, RationalGF, series_divide

X1 = LaurentPoly2.monomial(1, 0)
X2 = LaurentPoly2.monomial(0, 1)


def fundamental_chars_a2() -> tuple[LaurentPoly2, LaurentPoly2]:
    z1 = X1 + X2**-1 + X2 * X1**-1
    z2 = X2 + X1**-1 + X1 * X2**-1
    return z1, z2


def char_gf_a2() -> tuple[MultiPoly, MultiPoly]:
    """Numerator and denominator of G as polynomials in ``t1, t2, z1, z2``."""
    t1, t2, z1, z2 = MultiPoly.gens(("t1", "t2", "z1", "z2"))
    num = 1 - t1 * t2
    den = (1 - t1 * z1 + t1**2 * z2 - t1**3) * (1 - t2 * z2 + t2**2 * z1 - t2**3)
    return num, den


def char_gf_a2_expand(order: int) -> dict[tuple[int, int], LaurentPoly2]:
    """A2 characters for ``p + q <= order`` from the expansion of G."""
    tx = ("t1", "t2", "x1", "x2")
    z1, z2 = fundamental_chars_a2()
    images = {f"z{i}": MultiPoly(tx, {(0, 0, a, b): c for (a, b), c in z.items()})
              for i, z in ((1, z1), (2, z2))}
    num, den = (f.substitute(images, tx) for f in char_gf_a2())

    def coeffs(poly):
        return {k: LaurentPoly2(v.terms) for k, v in poly.split((0, 1)).items()}

    series = series_divide(coeffs(num), coeffs(den), order)
    return {(p, total - p): series.coeff(p, total - p) or LaurentPoly2()
            for total in range(order + 1) for p in range(total + 1)}


def zero_weight_gf_a2() -> RationalGF:
    return RationalGF.from_factors(
        1 - T1**3 * T2**3, [(1 - T1**3, 1), (1 - T1 * T2, 2), (1 - T2**3, 1)])
