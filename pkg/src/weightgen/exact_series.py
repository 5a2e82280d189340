"""Exact sparse arithmetic in two variables.

Four value types live here:

* :class:`LaurentPoly2` -- Laurent polynomials in ``x1, x2`` (characters).
* :class:`Poly2` -- ordinary polynomials in ``t1, t2``.
* :class:`TruncatedSeries2` -- power series in ``t1, t2`` truncated at a
  total degree.  Coefficients may be plain integers or any ring element that
  supports ``+``, ``-``, ``*`` and truthiness (e.g. :class:`LaurentPoly2`).
* :class:`RationalGF` -- a numerator/denominator pair of :class:`Poly2`.

Everything is immutable and uses Python integers, so identities hold
literally and there is no overflow.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

Exponent = tuple[int, int]


def _clean(terms: Iterable[tuple[Exponent, int]]) -> dict[Exponent, int]:
    out: dict[Exponent, int] = {}
    for e, c in terms:
        if c:
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _superscript(k: int) -> str:
    return str(k).translate(str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹"))


def format_terms(terms: Mapping[Exponent, object], names=("t1", "t2"),
                 unicode: bool = False) -> str:
    """Render a term map in graded-lexicographic order (degree, then e1).

    Low degree first, so ``1 + t1^2*t2`` rather than ``t1^2*t2 + 1``.
    """
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda e: (e[0] + e[1], -e[0], -e[1]))
    parts = []
    for e in keys:
        c = terms[e]
        mono = []
        for name, k in zip(names, e):
            if k == 0:
                continue
            if k == 1:
                mono.append(name)
            elif unicode:
                mono.append(name + _superscript(k))
            else:
                mono.append(f"{name}^{k}")
        mono_s = ("" if unicode else "*").join(mono)
        if isinstance(c, int):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono_s:
                body = mono_s if mag == 1 else f"{mag}*{mono_s}"
            else:
                body = str(mag)
        else:
            sign = "+"
            body = f"({c})" + (f"*{mono_s}" if mono_s else "")
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class LaurentPoly2:
    """Laurent polynomial in ``x1, x2`` with integer coefficients.

    Stored as ``{(e1, e2): coeff}`` with no zero coefficients.

    >>> x1 = LaurentPoly2.monomial(1, 0)
    >>> (x1 * LaurentPoly2.monomial(-1, 0)) == 1
    True
    """

    __slots__ = ("_terms", "_hash")
    names = ("x1", "x2")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable | None = None):
        if terms is None:
            items: Iterable = ()
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        self._terms = _clean((tuple(e), int(c)) for e, c in items)
        self._check()
        self._hash = None

    def _check(self):
        pass

    @classmethod
    def _wrap(cls, terms: dict[Exponent, int]):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        obj._check()
        return obj

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff: int = 1):
        return cls({(e1, e2): coeff})

    @classmethod
    def constant(cls, c: int):
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, e1: int, e2: int) -> int:
        return self._terms.get((e1, e2), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return NotImplemented

    def _result_type(self, other):
        return type(self) if type(self) is type(other) else LaurentPoly2

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return self._result_type(other)._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return type(self)._wrap({})
            return type(self)._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        terms: dict[Exponent, int] = {}
        for (a1, a2), ca in self._terms.items():
            for (b1, b2), cb in other._terms.items():
                e = (a1 + b1, a2 + b2)
                terms[e] = terms.get(e, 0) + ca * cb
        return self._result_type(other)._wrap({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly2({(-e[0], -e[1]): c}) ** (-k)
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({format_terms(self._terms, self.names)})"

    def __str__(self):
        return format_terms(self._terms, self.names)

    # evaluation and substitution -------------------------------------------
    def evaluate(self, x1, x2):
        """Evaluate at a point; integer or Fraction arguments stay exact."""
        total = 0
        for (e1, e2), c in self._terms.items():
            total += c * _power(x1, e1) * _power(x2, e2)
        return total

    def swap(self):
        """Exchange the roles of the two variables."""
        return type(self)._wrap({(e2, e1): c for (e1, e2), c in self._terms.items()})

    def leading(self) -> tuple[Exponent, int]:
        e = max(self._terms)
        return e, self._terms[e]

    def divexact(self, divisor: "LaurentPoly2") -> "LaurentPoly2":
        """Exact quotient ``self / divisor`` by lexicographic long division.

        Raises ``ArithmeticError`` when the division leaves a remainder.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        (d1, d2), dc = divisor.leading()
        rest = dict(self._terms)
        quotient: dict[Exponent, int] = {}
        dterms = list(divisor._terms.items())
        while rest:
            (r1, r2) = max(rest)
            rc = rest[(r1, r2)]
            q, rem = divmod(rc, dc)
            if rem:
                raise ArithmeticError("inexact Laurent division")
            qe = (r1 - d1, r2 - d2)
            quotient[qe] = q
            for (b1, b2), cb in dterms:
                e = (qe[0] + b1, qe[1] + b2)
                s = rest.get(e, 0) - q * cb
                if s:
                    rest[e] = s
                else:
                    rest.pop(e, None)
            if len(quotient) > 10 * (len(self._terms) + 1) * (len(dterms) + 1) ** 2:
                raise ArithmeticError("inexact Laurent division")
        return LaurentPoly2._wrap(quotient)


def _power(x, k: int):
    if k >= 0:
        return x ** k
    return Fraction(1) / Fraction(x) ** (-k)


def lp_mul(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    return a * b


def lp_coeff(a: LaurentPoly2, e1: int, e2: int) -> int:
    return a.coeff(e1, e2)


class Poly2(LaurentPoly2):
    """Polynomial in ``t1, t2``: a Laurent polynomial with no negative exponents."""

    __slots__ = ()
    names = ("t1", "t2")

    def _check(self):
        for e1, e2 in self._terms:
            if e1 < 0 or e2 < 0:
                raise ValueError(f"negative exponent {(e1, e2)} in Poly2")

    def _coerce(self, other):
        if isinstance(other, int):
            return Poly2.constant(other)
        return super()._coerce(other)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def degree(self) -> int:
        return max((e1 + e2 for e1, e2 in self._terms), default=-1)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        return super().__pow__(k)

    def truncated(self, order: int) -> "TruncatedSeries2":
        return TruncatedSeries2(order, self._terms)


T1 = Poly2.monomial(1, 0)
T2 = Poly2.monomial(0, 1)
ONE = Poly2.constant(1)


class TruncatedSeries2:
    """Bivariate power series modulo total degree ``> order``.

    ``terms`` maps ``(d1, d2)`` with ``d1 + d2 <= order`` to a coefficient.
    Integer coefficients are the usual case; :class:`LaurentPoly2`
    coefficients are used to expand character generating functions.
    """

    __slots__ = ("order", "_terms")

    def __init__(self, order: int, terms: Mapping[Exponent, object] | None = None):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        self.order = order
        self._terms = {}
        for (d1, d2), c in (terms or {}).items():
            if d1 < 0 or d2 < 0:
                raise ValueError(f"negative exponent {(d1, d2)} in series")
            if d1 + d2 <= order and c:
                self._terms[(d1, d2)] = self._terms.get((d1, d2), 0) + c
        self._terms = {e: c for e, c in self._terms.items() if c}

    @classmethod
    def _wrap(cls, order, terms):
        obj = cls.__new__(cls)
        obj.order = order
        obj._terms = terms
        return obj

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, d1: int, d2: int):
        if d1 + d2 > self.order:
            raise IndexError(f"t1^{d1} t2^{d2} is beyond the truncation order {self.order}")
        return self._terms.get((d1, d2), 0)

    def __bool__(self):
        return bool(self._terms)

    def _check_order(self, other: "TruncatedSeries2"):
        if not isinstance(other, TruncatedSeries2):
            raise TypeError("series arithmetic needs two TruncatedSeries2 operands")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check_order(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return TruncatedSeries2._wrap(self.order, terms)

    def __neg__(self):
        return TruncatedSeries2._wrap(self.order, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        self._check_order(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly2)) and not isinstance(other, TruncatedSeries2):
            terms = {e: c * other for e, c in self._terms.items()}
            return TruncatedSeries2._wrap(self.order, {e: c for e, c in terms.items() if c})
        self._check_order(other)
        n = self.order
        terms: dict[Exponent, object] = {}
        for (a1, a2), ca in self._terms.items():
            budget = n - a1 - a2
            for (b1, b2), cb in other._terms.items():
                if b1 + b2 > budget:
                    continue
                e = (a1 + b1, a2 + b2)
                prod = ca * cb
                terms[e] = terms[e] + prod if e in terms else prod
        return TruncatedSeries2._wrap(n, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def __repr__(self):
        return f"TruncatedSeries2(order={self.order}, {format_terms(self._terms)})"

    def coefficient_grid(self) -> list[list]:
        """Dense ``grid[d1][d2]`` view of the coefficients (zeros filled in)."""
        n = self.order
        return [[self._terms.get((d1, d2), 0) for d2 in range(n + 1 - d1)]
                for d1 in range(n + 1)]


def series_arith(a: TruncatedSeries2, b: TruncatedSeries2, op: str) -> TruncatedSeries2:
    ops: dict[str, Callable] = {
        "add": lambda u, v: u + v,
        "sub": lambda u, v: u - v,
        "mul": lambda u, v: u * v,
    }
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown series operation {op!r}") from None
    return fn(a, b)


def series_divide(numerator: TruncatedSeries2 | Mapping, denominator: Mapping,
                  order: int) -> TruncatedSeries2:
    """Power-series quotient by long division in graded order.

    ``denominator`` is a term map whose constant term must be invertible in
    the coefficient ring: a nonzero integer dividing every intermediate
    coefficient, or the Laurent polynomial ``1``.
    """
    num = numerator.terms if isinstance(numerator, TruncatedSeries2) else dict(numerator)
    den = {e: c for e, c in dict(denominator).items() if c and e[0] + e[1] <= order}
    d0 = den.pop((0, 0), 0)
    if not d0:
        raise ZeroDivisionError("denominator has zero constant term; no power-series expansion")
    unit_one = d0 == 1
    out: dict[Exponent, object] = {}
    den_items = list(den.items())
    for total in range(order + 1):
        for d1 in range(total, -1, -1):
            d2 = total - d1
            acc = num.get((d1, d2), 0)
            for (b1, b2), cb in den_items:
                prev = out.get((d1 - b1, d2 - b2))
                if prev is not None:
                    acc = acc - cb * prev
            if not acc:
                continue
            if not unit_one:
                if isinstance(acc, int) and isinstance(d0, int):
                    q, r = divmod(acc, d0)
                    if r:
                        raise ArithmeticError("series coefficients are not integral")
                    acc = q
                else:
                    raise ArithmeticError("constant term is not a unit in the coefficient ring")
            if acc:
                out[(d1, d2)] = acc
    return TruncatedSeries2._wrap(order, out)


@dataclass(frozen=True, eq=False)
class RationalGF:
    """Rational function ``numerator / denominator`` in ``t1, t2``.

    ``den_factors`` optionally keeps a factored form of the denominator as
    ``((factor, multiplicity), ...)``; it only affects printing.
    """

    numerator: Poly2
    denominator: Poly2
    den_factors: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not isinstance(self.numerator, Poly2) or not isinstance(self.denominator, Poly2):
            raise TypeError("RationalGF needs Poly2 numerator and denominator")
        if not self.denominator:
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def from_factors(cls, numerator, factors: Iterable[tuple[Poly2, int]]):
        factors = tuple((Poly2(f.terms) if not isinstance(f, Poly2) else f, k) for f, k in factors)
        den = ONE
        for f, k in factors:
            den = den * f ** k
        return cls(_as_poly(numerator), den, factors)

    @classmethod
    def polynomial(cls, p) -> "RationalGF":
        return cls(_as_poly(p), ONE)

    def series(self, order: int) -> TruncatedSeries2:
        return series_from_rational(self, order)

    def __add__(self, other):
        other = _as_rational(other)
        if self.denominator == other.denominator:
            return RationalGF(self.numerator + other.numerator, self.denominator, self.den_factors)
        return RationalGF(self.numerator * other.denominator + other.numerator * self.denominator,
                          self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalGF(-self.numerator, self.denominator, self.den_factors)

    def __sub__(self, other):
        return self + (-_as_rational(other))

    def __rsub__(self, other):
        return _as_rational(other) - self

    def __mul__(self, other):
        other = _as_rational(other)
        return RationalGF(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Poly2, RationalGF)):
            return rational_equal(self, _as_rational(other))
        return NotImplemented

    __hash__ = None

    def evaluate(self, t1, t2) -> Fraction:
        return Fraction(self.numerator.evaluate(t1, t2)) / Fraction(self.denominator.evaluate(t1, t2))

    def __str__(self):
        num = format_terms(self.numerator.terms, unicode=True)
        if self.den_factors:
            den = "".join(f"({format_terms(f.terms, unicode=True)})"
                          + (_superscript(k) if k != 1 else "")
                          for f, k in self.den_factors)
            if len(self.den_factors) > 1 or self.den_factors[0][1] != 1:
                den = f"({den})"
        else:
            den = f"({format_terms(self.denominator.terms, unicode=True)})"
        return f"({num})/{den}"


def _as_poly(p) -> Poly2:
    if isinstance(p, Poly2):
        return p
    if isinstance(p, int):
        return Poly2.constant(p)
    if isinstance(p, LaurentPoly2):
        return Poly2(p.terms)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial in t1, t2")


def _as_rational(x) -> RationalGF:
    return x if isinstance(x, RationalGF) else RationalGF.polynomial(x)


def series_from_rational(r: RationalGF, order: int) -> TruncatedSeries2:
    """Expand ``r`` as a power series up to total degree ``order``."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    if not r.denominator.constant_term:
        raise ZeroDivisionError("denominator has zero constant term; no power-series expansion")
    return series_divide(r.numerator.terms, r.denominator.terms, order)


def rational_equal(a: RationalGF, b: RationalGF) -> bool:
    """Cross-multiplication test; no cancellation or GCD involved."""
    return a.numerator * b.denominator == b.numerator * a.denominator


class MultiPoly:
    """Sparse Laurent polynomial in a fixed tuple of named variables.

    Used for the four-variable objects (``t1, t2, z1, z2`` and
    ``t1, t2, y1, y2``).  Exponents are integer tuples, coefficients ints.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: tuple[str, ...], terms: Mapping | Iterable | None = None):
        self.variables = tuple(variables)
        items = (terms or {}).items() if isinstance(terms, Mapping) or terms is None else terms
        self._terms = _clean((tuple(e), c) for e, c in items)
        for e in self._terms:
            if len(e) != len(self.variables):
                raise ValueError(f"exponent {e} does not match variables {self.variables}")

    @classmethod
    def gens(cls, variables: tuple[str, ...]) -> tuple["MultiPoly", ...]:
        k = len(variables)
        return tuple(cls(variables, {tuple(int(i == j) for i in range(k)): 1}) for j in range(k))

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, int):
            return MultiPoly(self.variables, {(0,) * len(self.variables): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiPoly(self.variables, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly(self.variables, {(0,) * len(self.variables): 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"MultiPoly({self.variables}, {len(self._terms)} terms)"

    def substitute(self, images: Mapping[str, "MultiPoly"], variables: tuple[str, ...]) -> "MultiPoly":
        """Compose: replace each variable by a polynomial in ``variables``.

        Variables missing from ``images`` must also occur in ``variables``
        and are carried over unchanged.
        """
        gens = dict(zip(variables, MultiPoly.gens(variables)))
        repl = [images.get(v, gens.get(v)) for v in self.variables]
        if any(r is None for r in repl):
            raise ValueError("substitution leaves a variable unmapped")
        out = MultiPoly(variables)
        cache: dict = {}
        for e, c in self._terms.items():
            term = MultiPoly(variables, {(0,) * len(variables): c})
            for i, k in enumerate(e):
                if k < 0:
                    raise ValueError("cannot substitute into a negative power")
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = repl[i] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def split(self, keep: tuple[int, ...]) -> dict[tuple, "MultiPoly"]:
        """Group terms by the exponents of the variables at positions ``keep``."""
        rest = tuple(i for i in range(len(self.variables)) if i not in keep)
        groups: dict[tuple, dict] = {}
        for e, c in self._terms.items():
            key = tuple(e[i] for i in keep)
            groups.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        rest_vars = tuple(self.variables[i] for i in rest)
        return {k: MultiPoly(rest_vars, v) for k, v in groups.items()}

    def evaluate(self, **values):
        total = 0
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, k in zip(self.variables, e):
                term *= _power(values[v], k)
            total += term
        return total
