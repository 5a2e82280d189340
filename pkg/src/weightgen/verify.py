"""Cross-validation harness: every identity checked against the oracles."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from . import genfunc_a2, genfunc_c2, recurrences
from .exact_series import Poly2, RationalGF, rational_equal
from .lie_rank2 import A2, C2, dominant_weights, freudenthal_mult, mult_table, weyl_character, weyl_dim, weyl_orbit


@dataclass
class CheckResult:
    name: str
    count: int = 0
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def total(self) -> int:
        return sum(r.count for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            status = "ok" if r.ok else "FAIL"
            line = f"{r.name:<22} {r.count:>7} checks  {status}"
            if r.failure:
                line += f"  first failure: {r.failure}"
            out.append(line)
        out.append(f"{'total':<22} {self.total:>7} checks  {'ok' if self.ok else 'FAIL'}")
        return out


def _run(name: str, cases: Iterator[tuple[bool, Callable[[], str]]]) -> CheckResult:
    # Cases are generated in increasing index order, so the first failure is minimal.
    res = CheckResult(name)
    for passed, describe in cases:
        res.count += 1
        if not passed:
            res.failure = describe()
            break
    return res


# ---------------------------------------------------------------------------
# low-lying table file format

def _terms_to_list(p: Poly2) -> list[list[int]]:
    return [[e1, e2, c] for (e1, e2), c in sorted(p.items())]


def appendix_to_json(table: dict[tuple[int, int], RationalGF]) -> dict:
    return {"schema": 1, "entries": [
        {"m": m, "n": n, "numerator": _terms_to_list(r.numerator),
         "denominator": _terms_to_list(r.denominator)}
        for (m, n), r in sorted(table.items())]}


def load_appendix(path: str | Path) -> dict[tuple[int, int], RationalGF]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    out = {}
    for entry in data["entries"]:
        num = Poly2({(a, b): c for a, b, c in entry["numerator"]})
        den = Poly2({(a, b): c for a, b, c in entry["denominator"]})
        out[(entry["m"], entry["n"])] = RationalGF(num, den)
    return out


# ---------------------------------------------------------------------------
# individual check families

def check_oracles(max_p: int, max_q: int) -> CheckResult:
    def cases():
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                tables = {meth: mult_table(C2, (p, q), meth).entries
                          for meth in ("freudenthal", "character", "genfunc", "counting")}
                ref = tables["freudenthal"]
                for w in dominant_weights(C2, (p, q)):
                    vals = {k: t.get(w, 0) for k, t in tables.items()}
                    yield (len(set(vals.values())) == 1,
                           lambda p=p, q=q, w=w, vals=vals: f"p={p} q={q} m={w.m} n={w.n} {vals}")
                dim = sum(v * len(weyl_orbit(C2, w)) for w, v in ref.items())
                yield (dim == weyl_dim(C2, (p, q)),
                       lambda p=p, q=q, dim=dim: f"p={p} q={q} dimension sum {dim} != {weyl_dim(C2, (p, q))}")
    return _run("four-way multiplicity", cases())


def check_zero_weight(max_p: int, max_q: int) -> CheckResult:
    series = genfunc_c2.zero_weight_gf_c2().series(max_p + max_q)
    pf = genfunc_c2.zero_weight_partial_fractions().series(max_p + max_q)

    def cases():
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                vals = (genfunc_c2.zero_weight_closed_form(p, q), series.coeff(p, q),
                        pf.coeff(p, q), freudenthal_mult(C2, (p, q), (0, 0)))
                yield len(set(vals)) == 1, lambda p=p, q=q, vals=vals: f"p={p} q={q} {vals}"
    return _run("zero weight", cases())


def check_rec1(max_p, max_q, max_m, max_n) -> CheckResult:
    def cases():
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                for m in range(max_m + 1):
                    for n in range(max_n + 1):
                        r = recurrences.rec1_residual(p, q, m, n)
                        y = recurrences.y_indicator(p, q, m, n)
                        yield r == y, lambda p=p, q=q, m=m, n=n, r=r, y=y: \
                            f"p={p} q={q} m={m} n={n} residual={r} y={y}"
    return _run("recurrence 1", cases())


def check_rec2(max_p, max_q, max_m, max_n) -> CheckResult:
    def cases():
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                for m in range(max_m + 1):
                    for n in range(max_n + 1):
                        r = recurrences.rec2_residual(p, q, m, n)
                        parts = recurrences.epsilon_indicator(p, q, m, n)
                        good = r == parts.value and not (parts.X and parts.Y)
                        yield good, lambda p=p, q=q, m=m, n=n, r=r, e=parts.value: \
                            f"p={p} q={q} m={m} n={n} residual={r} eps={e}"
    return _run("recurrence 2", cases())


def check_domains(max_p, max_q) -> CheckResult:
    def cases():
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                for w in dominant_weights(C2, (p, q)):
                    g = recurrences.epsilon_domain_classify(p, q, *w)
                    e = recurrences.epsilon_indicator(p, q, *w).value
                    yield g == e, lambda p=p, q=q, w=w, g=g, e=e: \
                        f"p={p} q={q} m={w.m} n={w.n} domain={g} eps={e}"
    return _run("epsilon domains", cases())


def check_appendix(table=None) -> CheckResult:
    table = table if table is not None else genfunc_c2.appendix_table()
    h = genfunc_c2.h_function()

    def cases():
        for (m, n), r in sorted(table.items()):
            good = (rational_equal(r, genfunc_c2.a_simplified(m, n))
                    and rational_equal(r, h.coefficient(m, n)))
            yield good, lambda m=m, n=n: f"A_{{{m},{n}}} disagrees with the simplified form / H"
    return _run("appendix", cases())


def check_closed_forms(max_m, max_n) -> CheckResult:
    def cases():
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                good = rational_equal(genfunc_c2.a_closed_raw(m, n), genfunc_c2.a_simplified(m, n))
                yield good, lambda m=m, n=n: f"A_{{{m},{n}}} raw form != simplified form"
    return _run("closed forms", cases())


def check_borders(max_p, max_q) -> CheckResult:
    def cases():
        for p in range(0, max_p + 1, 2):
            for q in range(0, min(max_q, p // 2) + 1, 2):
                b = recurrences.border_mults(p, q)
                yield not b.conflicts(), lambda p=p, q=q, b=b: f"p={p} q={q} conflicts {b.conflicts()}"
                for k, vals in sorted(b.by_formula.items()):
                    for w, v in sorted(vals.items()):
                        o = freudenthal_mult(C2, (p, q), w)
                        yield v == o, lambda p=p, q=q, k=k, w=w, v=v, o=o: \
                            f"p={p} q={q} formula {k} at {tuple(w)}: {v} != {o}"
    return _run("border formulas", cases())


def check_char_gf(order: int) -> CheckResult:
    def cases():
        yield genfunc_c2.char_gf_c2().forms_agree(), lambda: "z-form and x-form of G differ"
        chars = genfunc_c2.char_gf_expand(order)
        for (p, q), chi in sorted(chars.items()):
            yield chi == weyl_character(C2, (p, q)), lambda p=p, q=q: f"character ({p},{q})"
            yield chi.evaluate(1, 1) == weyl_dim(C2, (p, q)), lambda p=p, q=q: f"dimension ({p},{q})"
    return _run("character gf", cases())


def check_a2(max_p, max_q) -> CheckResult:
    series = genfunc_a2.zero_weight_gf_a2().series(max_p + max_q)

    def cases():
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                s, f = series.coeff(p, q), freudenthal_mult(A2, (p, q), (0, 0))
                yield s == f, lambda p=p, q=q, s=s, f=f: f"A2 p={p} q={q} series={s} freudenthal={f}"
    return _run("A2 zero weight", cases())


def run_all(max_p=10, max_q=10, max_m=None, max_n=None, appendix=None) -> Report:
    max_m = max(max_p, max_q) if max_m is None else max_m
    max_n = max(max_p, max_q) if max_n is None else max_n
    report = Report()
    report.results += [
        check_zero_weight(max_p, max_q),
        check_appendix(appendix),
        check_closed_forms(max_m, max_n),
        check_oracles(max_p, max_q),
        check_rec1(max_p, max_q, max_m, max_n),
        check_rec2(max_p, max_q, max_m, max_n),
        check_domains(max_p, max_q),
        check_borders(max_p, max_q),
        check_char_gf(min(max_p + max_q, 8)),
        check_a2(max_p, max_q),
    ]
    return report
