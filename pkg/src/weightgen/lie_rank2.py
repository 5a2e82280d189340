"""Rank-2 root systems (C2 and A2) and classical multiplicity oracles.

Weights are integer pairs ``(m, n)`` meaning ``m*lambda1 + n*lambda2`` in the
fundamental-weight basis.  The Freudenthal recursion and the Weyl character
formula implemented here are independent of the generating-function
machinery in :mod:`weightgen.genfunc_c2` and are used to check it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import NamedTuple

from .exact_series import LaurentPoly2, lp_coeff

METHODS = ("freudenthal", "character", "genfunc", "counting")


class Weight(NamedTuple):
    m: int
    n: int


class RepLabel(NamedTuple):
    p: int
    q: int


Matrix = tuple[tuple[int, int], tuple[int, int]]


def _apply(mat: Matrix, w) -> Weight:
    (a, b), (c, d) = mat
    return Weight(a * w[0] + b * w[1], c * w[0] + d * w[1])


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


@dataclass(frozen=True)
class RootSystem:
    """Root data in fundamental-weight coordinates.

    ``simple_roots[i]`` is row ``i`` of the Cartan matrix.  ``gram`` holds the
    inner products of the fundamental weights.
    """

    algebra: str
    simple_roots: tuple[Weight, Weight]
    gram: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    positive_roots: tuple[Weight, ...] = field(init=False)
    weyl_group: tuple[Matrix, ...] = field(init=False)
    rho: Weight = Weight(1, 1)

    def __post_init__(self):
        object.__setattr__(self, "weyl_group", self._generate_weyl_group())
        roots = {_apply(g, a) for g in self.weyl_group for a in self.simple_roots}
        positive = tuple(sorted(r for r in roots if self._is_positive(r)))
        object.__setattr__(self, "positive_roots", positive)

    def reflection(self, i: int) -> Matrix:
        # s_i(w) = w - w_i * alpha_i
        a = self.simple_roots[i]
        rows = [[1, 0], [0, 1]]
        for r in range(2):
            rows[r][i] -= a[r]
        return tuple(tuple(row) for row in rows)

    def _generate_weyl_group(self) -> tuple[Matrix, ...]:
        identity: Matrix = ((1, 0), (0, 1))
        gens = [self.reflection(0), self.reflection(1)]
        group = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = _matmul(s, g)
                    if h not in group:
                        group.add(h)
                        nxt.append(h)
            frontier = nxt
        return tuple(sorted(group))

    def simple_root_coords(self, w) -> tuple[Fraction, Fraction]:
        """Coefficients ``(a, b)`` with ``w = a*alpha1 + b*alpha2``."""
        (a11, a12), (a21, a22) = self.simple_roots
        det = a11 * a22 - a21 * a12
        a = Fraction(w[0] * a22 - w[1] * a21, det)
        b = Fraction(a11 * w[1] - a12 * w[0], det)
        return a, b

    def _is_positive(self, r) -> bool:
        a, b = self.simple_root_coords(r)
        return a >= 0 and b >= 0

    def inner(self, u, v) -> Fraction:
        g = self.gram
        return (u[0] * (g[0][0] * v[0] + g[0][1] * v[1])
                + u[1] * (g[1][0] * v[0] + g[1][1] * v[1]))

    @property
    def roots(self) -> frozenset[Weight]:
        return frozenset(self.positive_roots) | {Weight(-a, -b) for a, b in self.positive_roots}


def _frac_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


# C2: alpha1 = 2*l1 - l2 = e1 - e2 (short), alpha2 = 2*l2 - 2*l1 = 2*e2 (long),
# |l1| = 1, |l2| = sqrt(2) with l1 = e1, l2 = e1 + e2.
C2 = RootSystem("C2", (Weight(2, -1), Weight(-2, 2)), _frac_matrix([[1, 1], [1, 2]]))
A2 = RootSystem("A2", (Weight(2, -1), Weight(-1, 2)),
                _frac_matrix([[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]))

_SYSTEMS = {"C2": C2, "A2": A2}


def root_system(name: str) -> RootSystem:
    try:
        return _SYSTEMS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; expected C2 or A2") from None


def weyl_orbit(rs: RootSystem, w) -> frozenset[Weight]:
    return frozenset(_apply(g, w) for g in rs.weyl_group)


def dominant_representative(rs: RootSystem, w) -> Weight:
    """Reflect ``w`` into the dominant chamber."""
    m, n = w
    (a1, a2), (b1, b2) = rs.simple_roots
    while m < 0 or n < 0:
        # s_i(w) = w - w_i * alpha_i
        if m < 0:
            m, n = m - m * a1, n - m * a2
        else:
            m, n = m - n * b1, n - n * b2
    return Weight(m, n)


def is_dominant(w) -> bool:
    return w[0] >= 0 and w[1] >= 0


def contains_weight_c2(p: int, q: int, m: int, n: int) -> bool:
    """Closed-form containment test for dominant ``(m, n)`` in R(p, q) of C2."""
    return (p - m) % 2 == 0 and p + q >= m + n and p + 2 * q >= m + 2 * n


def contains_weight(rs: RootSystem, r, w) -> bool:
    """Whether the dominant weight ``w`` occurs in the irrep with highest weight ``r``.

    True iff ``r - w`` is a nonnegative integer combination of simple roots.
    Non-dominant ``w`` is first moved to its dominant representative.
    """
    w = dominant_representative(rs, w)
    a, b = rs.simple_root_coords((r[0] - w.m, r[1] - w.n))
    return a.denominator == 1 and b.denominator == 1 and a >= 0 and b >= 0


def weyl_dim(rs: RootSystem, r) -> int:
    lam_rho = (r[0] + rs.rho[0], r[1] + rs.rho[1])
    num = Fraction(1)
    den = Fraction(1)
    for a in rs.positive_roots:
        num *= rs.inner(lam_rho, a)
        den *= rs.inner(rs.rho, a)
    d = num / den
    assert d.denominator == 1
    return int(d)


def dominant_weights(rs: RootSystem, r) -> list[Weight]:
    """All dominant weights of the irrep ``r``, highest first.

    Every dominant weight below the highest weight in the root order occurs,
    so this enumerates ``r - a*alpha1 - b*alpha2`` over ``a, b >= 0``.
    For both algebras ``a + b <= p + q`` bounds the search.
    """
    p, q = r
    bound = p + q
    (a1, a2), (b1, b2) = rs.simple_roots
    found = []
    for a in range(bound + 1):
        for b in range(bound + 1):
            w = Weight(p - a * a1 - b * b1, q - a * a2 - b * b2)
            if is_dominant(w):
                found.append((a + b, w))
    found.sort(key=lambda t: (t[0], -t[1].m))
    return [w for _, w in found]


@lru_cache(maxsize=None)
def _freudenthal_table(rs: RootSystem, r: RepLabel) -> dict[Weight, int]:
    # Clear the Gram denominators so every inner product is an integer.
    scale = 1
    for row in rs.gram:
        for x in row:
            scale = lcm(scale, x.denominator)
    g = tuple(tuple(int(x * scale) for x in row) for row in rs.gram)

    def ip(u, v):
        return (u[0] * (g[0][0] * v[0] + g[0][1] * v[1])
                + u[1] * (g[1][0] * v[0] + g[1][1] * v[1]))

    rho = rs.rho
    lam_rho = (r[0] + rho[0], r[1] + rho[1])
    norm_top = ip(lam_rho, lam_rho)
    weights = dominant_weights(rs, r)
    # every dominant weight below the highest one occurs with positive multiplicity
    inside = set(weights)
    roots = [(a, ip(a, a)) for a in rs.positive_roots]
    dominant: dict[tuple[int, int], Weight] = {}
    table: dict[Weight, int] = {}
    for mu in weights:
        if mu == (r[0], r[1]):
            table[mu] = 1
            continue
        total = 0
        for alpha, alpha_sq in roots:
            # <mu + k alpha, alpha> grows by |alpha|^2 per step
            step = ip(mu, alpha)
            nu = mu
            while True:
                nu = (nu[0] + alpha[0], nu[1] + alpha[1])
                step += alpha_sq
                dom = dominant.get(nu)
                if dom is None:
                    dom = dominant[nu] = dominant_representative(rs, nu)
                if dom not in inside:
                    break
                total += table[dom] * step
        mu_rho = (mu[0] + rho[0], mu[1] + rho[1])
        denom = norm_top - ip(mu_rho, mu_rho)
        value, rem = divmod(2 * total, denom)
        if rem:
            raise ArithmeticError(f"Freudenthal division not exact at {mu} in {tuple(r)}")
        table[mu] = value
    return table


def freudenthal_table(rs: RootSystem, r) -> dict[Weight, int]:
    """Multiplicities of all dominant weights of the irrep ``r`` (Freudenthal)."""
    return dict(_freudenthal_table(rs, RepLabel(*r)))


def freudenthal_mult(rs: RootSystem, r, w) -> int:
    if r[0] < 0 or r[1] < 0:
        return 0
    w = dominant_representative(rs, w)
    return _freudenthal_table(rs, RepLabel(*r)).get(w, 0)


def _orbit_alternating_sum(rs: RootSystem, w) -> LaurentPoly2:
    terms: dict[tuple[int, int], int] = {}
    for g in rs.weyl_group:
        (a, b), (c, d) = g
        sign = a * d - b * c
        image = _apply(g, w)
        terms[image] = terms.get(image, 0) + sign
    return LaurentPoly2(terms)


@lru_cache(maxsize=None)
def _weyl_character(rs: RootSystem, r: RepLabel) -> LaurentPoly2:
    numerator = _orbit_alternating_sum(rs, (r[0] + rs.rho[0], r[1] + rs.rho[1]))
    denominator = _orbit_alternating_sum(rs, rs.rho)
    return numerator.divexact(denominator)


def weyl_character(rs: RootSystem, r) -> LaurentPoly2:
    """Character of the irrep ``r`` as a Laurent polynomial in ``x1, x2``.

    Computed as the quotient of alternating Weyl-orbit sums by exact
    Laurent long division.
    """
    return _weyl_character(rs, RepLabel(*r))


def mult_from_character(chi: LaurentPoly2, w) -> int:
    return lp_coeff(chi, w[0], w[1])


@dataclass(frozen=True)
class MultTable:
    label: RepLabel
    entries: dict[Weight, int]
    algebra: str = "C2"

    def __getitem__(self, w) -> int:
        return self.entries.get(Weight(*w), 0)

    def dimension(self) -> int:
        rs = root_system(self.algebra)
        return sum(mult * len(weyl_orbit(rs, w)) for w, mult in self.entries.items())


def mult_table(rs: RootSystem, r, method: str = "freudenthal") -> MultTable:
    """Dominant-weight multiplicity table of the irrep ``r``.

    ``method`` selects the route: ``freudenthal``, ``character``, ``genfunc``
    or ``counting``.  The last two exist only for C2.
    """
    r = RepLabel(*r)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method in ("genfunc", "counting") and rs.algebra != "C2":
        raise ValueError(f"method {method!r} is only available for C2")
    weights = dominant_weights(rs, r)
    if method == "freudenthal":
        values = {w: freudenthal_mult(rs, r, w) for w in weights}
    elif method == "character":
        chi = weyl_character(rs, r)
        values = {w: mult_from_character(chi, w) for w in weights}
    elif method == "genfunc":
        from .genfunc_c2 import mult_via_gf
        values = {w: mult_via_gf(w.m, w.n, r.p, r.q) for w in weights}
    else:
        from .recurrences import counting_rule_mult
        values = {w: counting_rule_mult(r.p, r.q, w.m, w.n) for w in weights}
    return MultTable(r, {w: v for w, v in values.items() if v}, rs.algebra)
