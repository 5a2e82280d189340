"""Generating functions for C2 weight multiplicities.

``A(m, n)`` denotes the rational function in ``t1, t2`` whose ``t1^p t2^q``
coefficient is the multiplicity of the weight ``(m, n)`` in R(p, q).  This
module builds it three ways (the raw closed form with removable factors, the
simplified finite-sum form, and coefficient extraction from the master
function ``H``), together with the character generating function ``G`` and
the auxiliary ``X`` and ``P`` combinations used by the recurrences.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_series import (ONE, T1, T2, LaurentPoly2, MultiPoly, Poly2, RationalGF,
                           TruncatedSeries2, series_divide)

X1 = LaurentPoly2.monomial(1, 0)
X2 = LaurentPoly2.monomial(0, 1)

# Factors of the common denominator D = (1 - t1^2)^2 (1 - t2^2) (1 - t2).
D_FACTORS = ((1 - T1**2, 2), (1 - T2**2, 1), (1 - T2, 1))
D = (1 - T1**2) ** 2 * (1 - T2**2) * (1 - T2)


def _mono(e1: int, e2: int) -> Poly2:
    return Poly2.monomial(e1, e2)


def parity_flag(k: int) -> int:
    """1 for even ``k``, 0 for odd."""
    return 1 if k % 2 == 0 else 0


# ---------------------------------------------------------------------------
# characters and G

def fundamental_chars_c2() -> tuple[LaurentPoly2, LaurentPoly2]:
    """Characters of the 4- and 5-dimensional fundamental representations."""
    z1 = X1 + X1**-1 + X1 * X2**-1 + X2 * X1**-1
    z2 = 1 + X2 + X2**-1 + X1**2 * X2**-1 + X2 * X1**-2
    return z1, z2


@dataclass(frozen=True)
class CharGF:
    """Character generating function of C2 in two presentations.

    ``numerator_z``/``denominator_z`` are polynomials in ``t1, t2, z1, z2``;
    ``numerator_x``/``denominator_x`` live in ``t1, t2, x1, x2`` (negative
    ``x`` powers allowed).
    """

    numerator_z: MultiPoly
    denominator_z: MultiPoly
    numerator_x: MultiPoly
    denominator_x: MultiPoly

    TX = ("t1", "t2", "x1", "x2")

    def z_substituted(self) -> tuple[MultiPoly, MultiPoly]:
        z1, z2 = fundamental_chars_c2()
        images = {"z1": _laurent_to_multi(z1, self.TX), "z2": _laurent_to_multi(z2, self.TX)}
        return (self.numerator_z.substitute(images, self.TX),
                self.denominator_z.substitute(images, self.TX))

    def forms_agree(self) -> bool:
        """Cross-multiplied identity between the z-form and the x-form."""
        nz, dz = self.z_substituted()
        return nz * self.denominator_x == self.numerator_x * dz


def _laurent_to_multi(lp: LaurentPoly2, variables) -> MultiPoly:
    return MultiPoly(variables, {(0, 0, e1, e2): c for (e1, e2), c in lp.items()})


def char_gf_c2() -> CharGF:
    t1, t2, z1, z2 = MultiPoly.gens(("t1", "t2", "z1", "z2"))
    num_z = 1 + t2 - z1 * t1 * t2 + t1**2 * t2 + t1**2 * t2**2
    den_z = ((1 - (t1 + t1**3) * z1 + t1**2 * (z2 + 1) + t1**4)
             * (1 - (t2 + t2**3) * (z2 - 1) + t2**2 * (z1**2 - 2 * z2) + t2**4))

    s1, s2, x1, x2 = MultiPoly.gens(CharGF.TX)
    num_x = x1**3 * x2**2 * ((1 + s2) * x1 * x2 + s1**2 * s2 * (1 + s2) * x1 * x2
                             - s1 * s2 * (1 + x2) * (x1**2 + x2))
    den_x = ((x1 - s1) * (s1 * x1 - 1) * (s1 * x1 - x2) * (s2 * x1**2 - x2)
             * (x2 - s2) * (x1 - s1 * x2) * (x1**2 - s2 * x2) * (s2 * x2 - 1))
    return CharGF(num_z, den_z, num_x, den_x)


def _laurent_coefficients(poly: MultiPoly) -> dict[tuple[int, int], LaurentPoly2]:
    """View a ``(t1, t2, x1, x2)`` polynomial as a t-polynomial over Laurent x-polynomials."""
    return {k: LaurentPoly2(v.terms) for k, v in poly.split((0, 1)).items()}


def char_gf_expand(order: int) -> dict[tuple[int, int], LaurentPoly2]:
    """Characters of R(p, q) for ``p + q <= order`` read off the expansion of G."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    num, den = char_gf_c2().z_substituted()
    series = series_divide(_laurent_coefficients(num), _laurent_coefficients(den), order)
    return {(p, total - p): series.coeff(p, total - p) or LaurentPoly2()
            for total in range(order + 1) for p in range(total + 1)}


# ---------------------------------------------------------------------------
# zero weight

def zero_weight_gf_c2() -> RationalGF:
    return RationalGF.from_factors(1 + T1**2 * T2, [(1 - T1**2, 2), (1 - T2, 1), (1 - T2**2, 1)])


def zero_weight_partial_fractions() -> RationalGF:
    """The zero-weight function as half the sum of two simpler fractions."""
    first = RationalGF.from_factors(ONE, [(1 - T1**2, 1), (1 - T2**2, 1)])
    second = RationalGF.from_factors(1 + T1**2, [(1 - T1**2, 2), (1 - T2, 2)])
    return (first + second) * RationalGF(ONE, Poly2.constant(2))


def zero_weight_closed_form(p: int, q: int) -> int:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    value = Fraction(parity_flag(p) * (parity_flag(q) + (p + 1) * (q + 1)), 2)
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------------------------
# master function H(t1, t2; y1, y2)

@dataclass(frozen=True)
class HCoefficients:
    a: Poly2
    b1: Poly2
    b2: Poly2
    c12: Poly2
    d: Poly2
    e: Poly2

    def numerator_terms(self) -> dict[tuple[int, int], Poly2]:
        """Numerator of H keyed by the ``(y1, y2)`` exponent."""
        return {(0, 0): self.a, (1, 0): self.b1, (0, 1): self.b2,
                (1, 1): self.c12, (2, 0): self.d, (2, 1): self.e}


def h_coefficients() -> HCoefficients:
    t1, t2 = T1, T2
    return HCoefficients(
        a=1 + t1**2 * t2,
        b1=t1 * t2 * (1 - t1**2),
        b2=-t1 * t2 * (t1**3 + t1 * t2),
        c12=t1 * t2 * (t1**4 - t1**2),
        d=-t1**2 * t2**2 * (1 + t2),
        e=t1**2 * t2**2 * (t1**2 + t1**2 * t2 + t2**2 - 1),
    )


class MasterGF:
    """``H(t1, t2; y1, y2)``, the generating function of all A(m, n).

    The denominator splits as ``D`` times four factors linear or quadratic in
    ``y``.  Their geometric expansions give closed polynomial coefficients,
    so the ``y1^m y2^n`` coefficient is an exact finite sum over ``D``.
    """

    def __init__(self, coefficients: HCoefficients | None = None):
        self.coefficients = coefficients or h_coefficients()
        self._numerator = self.coefficients.numerator_terms()

    @staticmethod
    @lru_cache(maxsize=None)
    def _y1_series(k: int) -> Poly2:
        # y1^k coefficient of 1/((1 - t1 y1)(1 - t2^2 y1^2))
        return Poly2({(k - 2 * j, 2 * j): 1 for j in range(k // 2 + 1)})

    @staticmethod
    @lru_cache(maxsize=None)
    def _y2_series(k: int) -> Poly2:
        # y2^k coefficient of 1/((1 - t1^2 y2)(1 - t2 y2))
        return Poly2({(2 * (k - j), j): 1 for j in range(k + 1)})

    def coefficient(self, m: int, n: int) -> RationalGF:
        if m < 0 or n < 0:
            raise ValueError("H only has nonnegative powers of y1, y2")
        num = Poly2()
        for (i, j), c in self._numerator.items():
            if i <= m and j <= n:
                num = num + c * self._y1_series(m - i) * self._y2_series(n - j)
        return RationalGF(num, D, D_FACTORS)

    def as_multipoly(self) -> tuple[MultiPoly, MultiPoly]:
        """Numerator and denominator as polynomials in ``t1, t2, y1, y2``."""
        vs = ("t1", "t2", "y1", "y2")
        t1, t2, y1, y2 = MultiPoly.gens(vs)
        num = MultiPoly(vs)
        for (i, j), c in self._numerator.items():
            num = num + MultiPoly(vs, {(e1, e2, i, j): k for (e1, e2), k in c.items()})
        den = ((1 - t1**2) ** 2 * (1 - t2**2) * (1 - t2) * (1 - t1 * y1)
               * (1 - t2**2 * y1**2) * (1 - t1**2 * y2) * (1 - t2 * y2))
        return num, den

    def evaluate(self, t1, t2, y1, y2) -> Fraction:
        num, den = self.as_multipoly()
        vals = dict(t1=t1, t2=t2, y1=y1, y2=y2)
        return Fraction(num.evaluate(**vals)) / Fraction(den.evaluate(**vals))


def h_function() -> MasterGF:
    return MasterGF()


# ---------------------------------------------------------------------------
# A(m, n)

def _f(m: int) -> Poly2:
    return T1**2 + T2 if m % 2 == 0 else T1 * (1 + T2)


def a_closed_raw(m: int, n: int) -> RationalGF:
    """Closed form of A(m, n) still carrying the removable factors
    ``(t1^2 - t2^2)(t1^2 - t2)`` in the denominator.

    The denominator vanishes at the origin, so this form cannot be expanded
    directly; compare it with :func:`rational_equal`.
    """
    _check_weight(m, n)
    num = (_mono(m + 2 * n + 2, 0) * (T1**2 - T2**2) * (1 - T2**2)
           - _mono(m + 2, n + 1) * (1 - T1**2) * (1 - T2**2)
           - _mono(0, m + n + 1) * (T1**2 - T2) * (1 - T1**2) * _f(m))
    factors = D_FACTORS + ((T1**2 - T2**2, 1), (T1**2 - T2, 1))
    return RationalGF.from_factors(num, factors)


def a_simplified_numerator(m: int, n: int) -> Poly2:
    _check_weight(m, n)
    head = (1 - T2**2) * Poly2({(m + 2 * n - 2 * j, j): 1 for j in range(n)})
    if m % 2 == 0:
        mid = Poly2({(2 * j, m + n - 2 * j): 1 for j in range(m // 2 + 1)})
        return (head + (1 - T1**2 + T2 - T2**3) * mid
                - (1 - T1**2 - T2**2) * _mono(0, m + n + 1) + _mono(m + 2, n))
    mid = Poly2({(2 * j + 1, m + n - 2 * j - 1): 1 for j in range((m - 3) // 2 + 1)})
    return (head + (1 + T2 - T2**2 - T1**2 * T2) * mid
            + (1 + T2 - T2**2) * _mono(m, n) + _mono(1, m + n + 1))


def a_simplified(m: int, n: int) -> RationalGF:
    """A(m, n) as a finite sum over ``D = (1-t1^2)^2 (1-t2^2)(1-t2)``."""
    return RationalGF(a_simplified_numerator(m, n), D, D_FACTORS)


def a_from_h(m: int, n: int) -> RationalGF:
    return h_function().coefficient(m, n)


def _check_weight(m: int, n: int):
    if m < 0 or n < 0:
        raise ValueError(f"weight ({m}, {n}) must be dominant (m, n >= 0)")


_SERIES_CACHE: dict[tuple[int, int], TruncatedSeries2] = {}
_MIN_ORDER = 24


def a_series(m: int, n: int, order: int) -> TruncatedSeries2:
    """Power series of A(m, n) to at least ``order``; cached per weight."""
    cached = _SERIES_CACHE.get((m, n))
    if cached is None or cached.order < order:
        new_order = max(order, _MIN_ORDER, 2 * cached.order if cached else 0)
        cached = a_simplified(m, n).series(new_order)
        _SERIES_CACHE[(m, n)] = cached
    return cached


def mult_via_gf(m: int, n: int, p: int, q: int) -> int:
    """Multiplicity of ``(m, n)`` in R(p, q) as a coefficient of A(m, n)."""
    for v in (m, n, p, q):
        if v < 0:
            raise ValueError("arguments must be nonnegative")
    return a_series(m, n, p + q).coeff(p, q)


# ---------------------------------------------------------------------------
# X and P

def x_function(m: int, n: int) -> RationalGF:
    """``(1 - t1^2)(1 - t2) A(m, n)``."""
    return a_simplified(m, n) * ((1 - T1**2) * (1 - T2))


def x_explicit(m: int, n: int) -> RationalGF:
    """X(m, n) assembled from its parity-dependent finite sums."""
    _check_weight(m, n)
    den = (1 - T1**2) * (1 - T2**2)
    head = (1 - T2**2) * Poly2({(m + 2 * n - 2 * j, j): 1 for j in range(n)})
    if m % 2 == 0:
        mid = Poly2({(2 * j, m + n - 2 * j): 1 for j in range(m // 2 + 1)})
        num = (head + (1 - T2**2) * ((1 + T2) * mid - _mono(0, m + n + 1))
               + _mono(2, m + n + 1) + _mono(0, m + n + 2))
    else:
        mid = Poly2({(2 * j + 1, m + n - 1 - 2 * j): 1 for j in range((m - 3) // 2 + 1)})
        num = (head + (1 - T2**2) * (1 + T2) * (mid + _mono(m, n))
               + (1 + T2) * _mono(1, m + n + 1))
    return RationalGF.from_factors(num, [(1 - T1**2, 1), (1 - T2**2, 1)])


def p_function(m: int, n: int) -> RationalGF:
    """``A(m,n) - A(m+2,n) - A(m,n+1) + A(m+2,n+1)``."""
    _check_weight(m, n)
    num = (a_simplified_numerator(m, n) - a_simplified_numerator(m + 2, n)
           - a_simplified_numerator(m, n + 1) + a_simplified_numerator(m + 2, n + 1))
    return RationalGF(num, D, D_FACTORS)


def p_explicit(m: int, n: int) -> RationalGF:
    """P(m, n) assembled from its parity-dependent finite sums."""
    _check_weight(m, n)
    first = Poly2({(m + 2 * n - 2 * j, j): 1 for j in range(n + 1)})
    if m % 2 == 0:
        second = Poly2({(2 * j, m + n - 2 * j): 1 for j in range(m // 2)})
        tail = _mono(0, m + n + 1)
    else:
        second = Poly2({(2 * j + 1, m + n - 1 - 2 * j): 1 for j in range((m - 3) // 2 + 1)})
        tail = _mono(1, m + n + 1)
    num = (first + second) * (1 - T1**2) - tail
    return RationalGF.from_factors(num, [(1 - T1**2, 1), (1 - T2, 1)])


# ---------------------------------------------------------------------------
# low-lying weights, transcribed

def appendix_table() -> dict[tuple[int, int], RationalGF]:
    """A(m, n) for ``m + n <= 4`` written out term by term."""
    t1, t2 = T1, T2
    f2 = [(1 - t1**2, 2), (1 - t2, 2)]
    f3 = [(1 - t1**2, 2), (1 - t2, 2), (1 + t2, 1)]
    g = RationalGF.from_factors
    return {
        (0, 0): zero_weight_gf_c2(),
        (1, 0): g(t1, f2),
        (0, 1): g(t1**2 + t2, [(1 - t1**2, 2), (1 - t2, 1), (1 - t2**2, 1)]),
        (2, 0): g(t2**2 + t1**2 * (1 + t2 - t2**2), f3),
        (1, 1): g(t1**3 * (1 - t2) + t1 * t2, f2),
        (0, 2): g(t1**2 * t2 + t2**2 + t1**4 * (1 - t2**2), f3),
        (3, 0): g(t1 * t2**2 + t1**3 * (1 - t2**2), f2),
        (2, 1): g(t2**3 + t1**4 * (1 - t2**2) + t1**2 * t2 * (1 + t2 - t2**2), f3),
        (1, 2): g(t1**5 * (1 - t2) + t1**3 * t2 * (1 - t2) + t1 * t2**2, f2),
        (0, 3): g(t1**2 * t2**2 + t2**3 + t1**6 * (1 - t2**2) + t1**4 * t2 * (1 - t2**2), f3),
        (4, 0): g(t2**4 + t1**4 * (1 - t2) * (1 + t2) ** 2 + t1**2 * t2**2 * (1 + t2 - t2**2), f3),
        (3, 1): g(t1**5 * (1 - t2) + t1 * t2**3 + t1**3 * t2 * (1 - t2**2), f2),
        (2, 2): g(t2**4 + t1**6 * (1 - t2**2) + t1**4 * t2 * (1 - t2**2)
                  + t1**2 * t2**2 * (1 + t2 - t2**2), f3),
        (1, 3): g(t1**7 * (1 - t2) + t1**5 * t2 * (1 - t2) + t1**3 * t2**2 * (1 - t2)
                  + t1 * t2**3, f2),
        (0, 4): g(t1**2 * t2**3 + t2**4 + t1**8 * (1 - t2**2) + t1**6 * t2 * (1 - t2**2)
                  + t1**4 * t2**2 * (1 - t2**2), f3),
    }
