"""Recurrences, the counting rule and border formulas for C2 multiplicities.

``mu(p, q, m, n)`` below is the multiplicity of ``m*l1 + n*l2`` in
R(p*l1 + q*l2).  Two four-term recurrences hold:

* across representations, fixed weight::

    mu(p,q,m,n) - mu(p-2,q,m,n) - mu(p,q-1,m,n) + mu(p-2,q-1,m,n) = y(p,q,m,n)

* across weights, fixed representation::

    mu(p,q,m,n) - mu(p,q,m+2,n) - mu(p,q,m,n+1) + mu(p,q,m+2,n+1) = eps(p,q,m,n)

Telescoping the first one gives the counting rule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .genfunc_c2 import zero_weight_closed_form
from .lie_rank2 import C2, Weight, contains_weight_c2, freudenthal_mult


class CartesianWeight(NamedTuple):
    """Weight diagram coordinates: ``x = m``, ``y = m + 2n``."""

    x: int
    y: int

    @classmethod
    def from_weight(cls, m: int, n: int) -> "CartesianWeight":
        return cls(m, m + 2 * n)

    def to_weight(self) -> Weight:
        if (self.y - self.x) % 2:
            raise ValueError(f"{tuple(self)} is not on the weight lattice")
        return Weight(self.x, (self.y - self.x) // 2)


def _mu(p: int, q: int, m: int, n: int) -> int:
    if min(p, q, m, n) < 0:
        return 0
    return freudenthal_mult(C2, (p, q), (m, n))


def y_indicator(p: int, q: int, m: int, n: int) -> int:
    """Right-hand side of the first recurrence.

    1 when R(p, q) contains ``(m, n)``, except that it is 0 for even ``m``,
    ``p = 0`` and ``q - n`` odd.
    """
    if not contains_weight_c2(p, q, m, n):
        return 0
    if m % 2 == 0 and p == 0 and (q - n) % 2:
        return 0
    return 1


def rec1_residual(p: int, q: int, m: int, n: int) -> int:
    return (_mu(p, q, m, n) - _mu(p - 2, q, m, n)
            - _mu(p, q - 1, m, n) + _mu(p - 2, q - 1, m, n))


@dataclass(frozen=True)
class EpsilonParts:
    X: int
    Y: int
    Z: int

    @property
    def value(self) -> int:
        return self.X + self.Y - self.Z


def epsilon_indicator(p: int, q: int, m: int, n: int) -> EpsilonParts:
    """Right-hand side of the second recurrence, split into its three terms.

    Weights with ``m - p`` odd never occur in R(p, q); every flag is 0 there.
    """
    if (m - p) % 2:
        return EpsilonParts(0, 0, 0)
    X = int(m <= p and p <= m + 2 * n <= p + 2 * q)
    Y = int(m >= p + 2 and m + n <= p + q)
    Z = int(m + n <= q - 1)
    return EpsilonParts(X, Y, Z)


def rec2_residual(p: int, q: int, m: int, n: int) -> int:
    return (_mu(p, q, m, n) - _mu(p, q, m + 2, n)
            - _mu(p, q, m, n + 1) + _mu(p, q, m + 2, n + 1))


def counting_rule_mult(p: int, q: int, m: int, n: int) -> int:
    """Multiplicity by counting ``y`` over ``(p - 2i, q - j)``, ``i, j >= 0``."""
    if min(p, q, m, n) < 0:
        raise ValueError("arguments must be nonnegative")
    return sum(y_indicator(pp, qq, m, n)
               for pp in range(p, -1, -2) for qq in range(q, -1, -1))


# ---------------------------------------------------------------------------
# epsilon domains in the weight diagram

def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(pt, a, b) -> bool:
    return (_cross(a, b, pt) == 0
            and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))


def in_convex_polygon(pt, vertices) -> bool:
    """Closed membership test; degenerate polygons (segments, points) allowed."""
    verts = []
    for v in vertices:
        if not verts or tuple(v) != verts[-1]:
            verts.append(tuple(v))
    if len(verts) > 1 and verts[0] == verts[-1]:
        verts.pop()
    if len(verts) == 1:
        return tuple(pt) == verts[0]
    if all(_cross(verts[0], verts[1], v) == 0 for v in verts[2:]):
        ends = sorted(verts)
        return _on_segment(pt, ends[0], ends[-1])
    signs = {_cross(verts[i], verts[(i + 1) % len(verts)], pt) > 0
             for i in range(len(verts))
             if _cross(verts[i], verts[(i + 1) % len(verts)], pt) != 0}
    return len(signs) <= 1


def overlap_region(p: int, q: int) -> tuple[str, list[tuple[int, int]]]:
    """Which of the three cases applies, and the overlap polygon's vertices.

    ``"none"`` (2q-2 < p), ``"T"`` (p <= 2q-2 <= 2p, triangle) or ``"K"``
    (2q-2 > 2p, quadrilateral).
    """
    h = 2 * q - 2
    if h < p:
        return "none", []
    if h <= 2 * p:
        return "T", [(0, h), (0, p), (h - p, p)]
    return "K", [(0, p), (0, h), (q - 1, q - 1), (p, p)]


def epsilon_domain_classify(p: int, q: int, m: int, n: int) -> int:
    """The domain (+1, 0 or -1) of the weight ``(m, n)`` in the diagram of R(p, q).

    Geometric route: the upper region starts at the line ``y = p``; the
    lower region is the diagonal ``x + y = 2q - 2`` and below; where they
    overlap (triangle or quadrilateral) the value is 0.
    """
    x, y = CartesianWeight.from_weight(m, n)
    upper = y >= p
    lower = x + y <= 2 * q - 2
    _, poly = overlap_region(p, q)
    if poly and in_convex_polygon((x, y), poly):
        return 0
    if upper:
        return 1
    if lower:
        return -1
    return 0


# ---------------------------------------------------------------------------
# border formulas

def theta(r: int) -> int:
    """1 for even ``r``, 0 for odd."""
    return 1 if r % 2 == 0 else 0


@dataclass
class BorderMults:
    """Border multiplicities of R(p, q) from the closed formulas.

    ``by_formula[k]`` holds what formula ``k`` (1..6) predicts; formula 6 is
    a chain of differences along the vertical axis started from the
    zero-weight value, stored in ``differences`` as ``s -> mu(0,s) - mu(0,s+1)``.
    """

    p: int
    q: int
    by_formula: dict[int, dict[Weight, int]] = field(default_factory=dict)
    differences: dict[int, int] = field(default_factory=dict)

    @property
    def values(self) -> dict[Weight, int]:
        out: dict[Weight, int] = {}
        for k in sorted(self.by_formula):
            for w, v in self.by_formula[k].items():
                out.setdefault(w, v)
        return out

    def conflicts(self) -> list[tuple[Weight, dict[int, int]]]:
        """Weights on which two formulas disagree."""
        seen: dict[Weight, dict[int, int]] = {}
        for k, vals in self.by_formula.items():
            for w, v in vals.items():
                seen.setdefault(w, {})[k] = v
        return [(w, d) for w, d in seen.items() if len(set(d.values())) > 1]


def border_mults(p: int, q: int) -> BorderMults:
    """Closed-form border multiplicities for even ``p, q`` with ``q <= p/2``.

    The formula along the vertical axis between ``n = q`` and ``n = p/2`` is
    used with leading term ``(q+1)(q+2)/2``; it then continues the formula
    above it at ``n = p/2`` and matches Freudenthal.
    """
    if p % 2 or q % 2 or 2 * q > p or p < 0 or q < 0:
        raise ValueError(f"border formulas need even p, q with q <= p/2; got ({p}, {q})")
    b = BorderMults(p, q)
    b.by_formula[1] = {Weight(p + q - 2 * s, 0): (s + 1) ** 2 for s in range(q // 2 + 1)}
    b.by_formula[2] = {Weight(p - 2 * s, 0): (q // 2 + 1) ** 2 + s * (q + 1)
                       for s in range((p - q) // 2 + 1)}
    mu00 = zero_weight_closed_form(p, q)
    b.by_formula[3] = {Weight(2 * s, 0): mu00 - s * s for s in range(q // 2 + 1)}
    b.by_formula[4] = {Weight(0, p // 2 + q - s): (s + 1) * (s + 2) // 2 for s in range(q + 1)}
    b.by_formula[5] = {Weight(0, p // 2 - s): (q + 1) * (q + 2) // 2 + s * (q + 1)
                       for s in range(p // 2 - q + 1)}
    chain = {Weight(0, 0): mu00}
    current = mu00
    for s in range(q):
        diff = s + 1 - theta(s + 1)
        b.differences[s] = diff
        current -= diff
        chain[Weight(0, s + 1)] = current
    b.by_formula[6] = chain
    return b


def border_vertical_alternative(p: int, q: int) -> dict[Weight, int]:
    """The vertical-axis formula with the alternative leading term ``(s+1)(s+2)/2``.

    Kept for comparison only.  It agrees with the multiplicities only when
    ``(s+1)(s+2) == (q+1)(q+2)``, i.e. at ``s = q``.
    """
    return {Weight(0, p // 2 - s): (s + 1) * (s + 2) // 2 + s * (q + 1)
            for s in range(p // 2 - q + 1)}
