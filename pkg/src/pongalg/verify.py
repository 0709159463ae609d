"""Exhaustive checks of the DGA axioms over a bounded set of generators.

Every check is run on generators (elements are F_2[v]-linear combinations, so
generators suffice).  Operands reached outside the bound, e.g. resolutions or
composites with larger displacement, are still computed exactly.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import asteroids, core
from .algebra import WeightBookkeepingError, diff, diff_gen, mu2, mu2_gen, weight_of_term
from .oracle.diagram import (
    InvariantViolation,
    empty_rectangles,
    oracle_differential,
    positivity,
)
from .oracle.geometry import GenericityError
from .oracle.triangles import oracle_product, triangle_domain
from .polynomial import Element, mono_mul

log = logging.getLogger(__name__)

MAX_FAILURES = 20


@dataclass
class Report:
    suite: str
    params: dict
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, name: str, n: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + n

    def fail(self, check: str, **operands) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append({"check": check, **{k: repr(v) for k, v in operands.items()}})

    def merge(self, other: Report) -> None:
        for name, n in other.checks.items():
            self.count(name, n)
        for f in other.failures:
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(f)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": dict(sorted(self.checks.items())),
            "passed": self.passed,
            "failures": self.failures,
            "wall_time": round(self.wall_time, 3),
        }


def _gen(g) -> Element:
    return Element.generator(g)


def check_generator(f, report: Report, outer_us: bool) -> None:
    try:
        terms = diff_gen(f)
    except WeightBookkeepingError as exc:
        report.fail("diff-exponents", f=f, error=str(exc))
        return
    for mono, h in terms:
        report.count("diff-grading")
        if h.cross != f.cross - 1:
            report.fail("diff-grading", f=f, term=h)
        if weight_of_term(h, mono) != f.weight:
            report.fail("diff-weight", f=f, term=h, mono=mono)
    report.count("d-squared")
    dd = diff(diff(_gen(f)))
    if dd:
        report.fail("d-squared", f=f, result=dd)
    e_dom = type(f).identity(f.m, f.domain_idempotent)
    e_img = type(f).identity(f.m, f.image_idempotent)
    report.count("unit")
    if mu2(_gen(e_dom), _gen(f)) != _gen(f) or mu2(_gen(f), _gen(e_img)) != _gen(f):
        report.fail("unit", f=f)


def check_pair(f, g, report: Report, outer_us: bool) -> None:
    a, b = _gen(f), _gen(g)
    try:
        res = mu2_gen(f, g)
    except WeightBookkeepingError as exc:
        report.fail("mu2-exponents", f=f, g=g, error=str(exc))
        return
    if res is not None:
        mono, h = res
        report.count("mu2-grading")
        if h.cross != f.cross + g.cross:
            report.fail("mu2-grading", f=f, g=g)
        total = tuple(x + y for x, y in zip(f.weight, g.weight))
        if weight_of_term(h, mono) != total:
            report.fail("mu2-weight", f=f, g=g, mono=mono)
        if outer_us:
            report.count("no-outer-us")
            if mono[0] or mono[-1]:
                report.fail("no-outer-us", f=f, g=g, mono=mono)
    report.count("leibniz")
    lhs = diff(mu2(a, b))
    rhs = mu2(diff(a), b) + mu2(a, diff(b))
    if lhs != rhs:
        report.fail("leibniz", f=f, g=g, lhs=lhs, rhs=rhs)


def _times(term, h):
    """Single-term product ``term * h`` at generator level, or None."""
    if term is None:
        return None
    res = mu2_gen(term[1], h)
    if res is None:
        return None
    return mono_mul(term[0], res[0]), res[1]


def _times_left(f, term):
    if term is None:
        return None
    res = mu2_gen(f, term[1])
    if res is None:
        return None
    return mono_mul(term[0], res[0]), res[1]


def check_triples(f, gens_by_domain: dict, report: Report) -> None:
    """Associativity for every composable triple starting at ``f``.

    Products of generators are single terms, so both bracketings are compared
    as ``(monomial, generator)`` pairs.
    """
    for g in gens_by_domain.get(f.image_idempotent, ()):
        fg = mu2_gen(f, g)
        hs = gens_by_domain.get(g.image_idempotent, ())
        report.count("associativity", len(hs))
        for h in hs:
            gh = mu2_gen(g, h)
            if fg is None and gh is None:
                continue
            left = _times(fg, h)
            right = _times_left(f, gh)
            if left != right:
                report.fail("associativity", f=f, g=g, h=h, left=left, right=right)


def _by_domain(gens) -> dict:
    out: dict = {}
    for g in gens:
        out.setdefault(g.domain_idempotent, []).append(g)
    return out


def _check_chunk(args) -> Report:
    gens, chunk, outer_us, name, params = args
    report = Report(name, params)
    by_dom = _by_domain(gens)
    for f in chunk:
        check_generator(f, report, outer_us)
        for g in by_dom.get(f.image_idempotent, ()):
            check_pair(f, g, report, outer_us)
        check_triples(f, by_dom, report)
    return report


def run_axioms(name: str, gens: list, params: dict, outer_us: bool, jobs: int = 1) -> Report:
    start = time.perf_counter()
    report = Report(name, params)
    if jobs <= 1:
        chunks = [gens]
    else:
        chunks = [gens[i::jobs] for i in range(jobs)]
    tasks = [(gens, chunk, outer_us, name, params) for chunk in chunks]
    if jobs <= 1:
        parts = [_check_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_check_chunk, tasks))
    for part in parts:
        report.merge(part)
    report.failures.sort(key=lambda f: sorted(f.items()))
    report.wall_time = time.perf_counter() - start
    log.info("%s %s: %s checks, %d failures", name, params, sum(report.checks.values()),
             len(report.failures))
    return report


def verify_dga(m: int, k: int, max_disp: int, jobs: int = 1,
               gens: list | None = None) -> Report:
    """All pong axioms, including additivity of the outer weights under mu2."""
    if gens is None:
        gens = core.enumerate_generators(m, k, max_disp)
    return run_axioms("dga", gens, {"m": m, "k": k, "max_disp": max_disp}, True, jobs)


def a_verify(m: int, k: int, max_disp: int, jobs: int = 1,
             gens: list | None = None) -> Report:
    if gens is None:
        gens = asteroids.enumerate_generators(m, k, max_disp)
    return run_axioms("asteroids", gens, {"m": m, "k": k, "max_disp": max_disp}, False, jobs)



# -- oracle suites ---------------------------------------------------------


def _oracle_chunk(args) -> Report:
    worker, gens, chunk, name, params = args
    report = Report(name, params)
    by_dom = _by_domain(gens)
    for f in chunk:
        worker(f, gens, by_dom, report)
    return report


def _run_oracle(name: str, worker, gens: list, params: dict, jobs: int) -> Report:
    start = time.perf_counter()
    report = Report(name, params)
    chunks = [gens] if jobs <= 1 else [gens[i::jobs] for i in range(jobs)]
    tasks = [(worker, gens, chunk, name, params) for chunk in chunks]
    if jobs <= 1:
        parts = [_oracle_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_oracle_chunk, tasks))
    for part in parts:
        report.merge(part)
    report.failures.sort(key=lambda f: sorted(f.items()))
    report.wall_time = time.perf_counter() - start
    return report


_ORACLE_ERRORS = (InvariantViolation, GenericityError, AssertionError)


def _diff_worker(f, gens, by_dom, report: Report) -> None:
    report.count("oracle-diff")
    try:
        got = oracle_differential(f)
    except _ORACLE_ERRORS as exc:
        report.fail("oracle-diff", f=f, error=str(exc))
        return
    want = diff(_gen(f))
    if got != want:
        report.fail("oracle-diff", f=f, oracle=got, algebra=want)
    for rect in empty_rectangles(f):
        report.count("bigon-shape")
        # a bigon is exactly a rectangle some rotation in G_m maps to itself
        rotated = any(
            (a, b, c, d) == (rect.x1, rect.x2, rect.y2, rect.y1)
            for a, b, c, d in _rotations(f.m, rect)
        )
        if rotated != (rect.shape == "bigon"):
            report.fail("bigon-shape", f=f, rect=rect)


def _rotations(m: int, rect):
    period = 2 * m - 2
    a, b = 1 - rect.x2, 1 - rect.x1
    c, d = 1 - rect.y1, 1 - rect.y2
    n = (rect.x1 - a) // period
    for s in (n * period, (n + 1) * period):
        yield a + s, b + s, c + s, d + s


def _mul_worker(f, gens, by_dom, report: Report) -> None:
    for g in by_dom.get(f.image_idempotent, ()):
        report.count("oracle-mul")
        try:
            got = oracle_product(f, g)
        except _ORACLE_ERRORS as exc:
            report.fail("oracle-mul", f=f, g=g, error=str(exc))
            continue
        want = mu2(_gen(f), _gen(g))
        if got != want:
            report.fail("oracle-mul", f=f, g=g, oracle=got, algebra=want)


def _order_worker(f, gens, by_dom, report: Report) -> None:
    for g in by_dom.get(f.domain_idempotent, ()):
        if g.image_idempotent != f.image_idempotent:
            continue
        report.count("order")
        try:
            positivity(f, g)
        except _ORACLE_ERRORS as exc:
            report.fail("order", f=f, g=g, error=str(exc))


def _euler_worker(f, gens, by_dom, report: Report) -> None:
    for g in by_dom.get(f.image_idempotent, ()):
        try:
            dom = triangle_domain(f, g)
            euler = dom.euler
        except _ORACLE_ERRORS as exc:
            report.fail("triangles", f=f, g=g, error=str(exc))
            continue
        o = dom.o_counts
        report.count("weight-equation")
        if any(x < 0 for x in o) or o != dom.o_counts_marked:
            report.fail("weight-equation", f=f, g=g, weights=o, marked=dom.o_counts_marked)
        report.count("euler-measure")
        if euler != dom.euler_expected():
            report.fail("euler-measure", f=f, g=g, euler=euler, expected=dom.euler_expected())
        report.count("sarkar-index")
        if dom.sarkar_index() != dom.maslov:
            report.fail("sarkar-index", f=f, g=g, index=dom.sarkar_index(), maslov=dom.maslov)
        if o[0] == 0 and o[-1] == 0:
            report.count("triangle-maslov")
            defect = f.cross + g.cross - dom.composite.cross
            if dom.diag_count != defect:
                report.fail("triangle-maslov", f=f, g=g, diag=dom.diag_count, defect=defect)
        res = mu2_gen(f, g)
        if res is not None:
            report.count("no-outer-us")
            if res[0][0] or res[0][-1]:
                report.fail("no-outer-us", f=f, g=g, mono=res[0])


ORACLE_SUITES = {
    "oracle-diff": _diff_worker,
    "oracle-mul": _mul_worker,
    "order": _order_worker,
    "euler": _euler_worker,
}


def verify_oracle(suite: str, m: int, k: int, max_disp: int, jobs: int = 1,
                  gens: list | None = None) -> Report:
    """Compare the pong algebra against the diagram model."""
    if gens is None:
        gens = core.enumerate_generators(m, k, max_disp)
    params = {"m": m, "k": k, "max_disp": max_disp}
    return _run_oracle(suite, ORACLE_SUITES[suite], gens, params, jobs)
