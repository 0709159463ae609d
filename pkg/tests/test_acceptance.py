"""Acceptance criteria 1-8, one printed PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""

import contextlib
import io
import json
import random
import time

import pytest

from pongalg import asteroids, core
from pongalg.asteroids import CyclicLiftedPermutation
from pongalg.cli import main
from pongalg.core import LiftedPermutation
from pongalg.oracle.diagram import empty_rectangles, oracle_differential
from pongalg.polynomial import Element
from pongalg.pong import diff
from pongalg.serialize import dumps, element_to_record, record_to_element
from pongalg.verify import a_verify, verify_dga, verify_oracle

PONG = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]
ASTEROIDS = [(2, 1), (3, 1), (3, 2), (4, 1)]
AST_EX = CyclicLiftedPermutation(3, (1, 2), (6, 1))


def report(capsys, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def _failures(reports):
    return sum(len(r.failures) for r in reports)


def check_1():
    cross, weight = AST_EX.cross, AST_EX.weight
    ok = cross == 2 and weight == (1, 3, 2)
    return ok, f"crossings={cross} doubled weight={list(weight)} (expect 2, [1,3,2])"


def check_2():
    d = asteroids.a_diff(Element.generator(AST_EX))
    monos = [list(p) for _, p in d.items()]
    ok = len(d) == 2 and monos == [[(0, 1, 0)], [(0, 1, 0)]]
    return ok, f"{len(d)} terms, coefficients {monos}"


def check_3():
    f = LiftedPermutation.from_map(3, {2: -1})
    want = Element.monomial(LiftedPermutation.from_map(3, {2: 2}), (1, 1, 0))
    got = diff(Element.generator(f))
    shapes = [r.shape for r in empty_rectangles(f)]
    ok = got == want and oracle_differential(f) == want and shapes == ["bigon"]
    return ok, f"d = {got!r}; oracle regions {shapes}"


def check_4():
    start = time.perf_counter()
    reps = [verify_dga(m, k, 4) for m, k in PONG]
    reps += [a_verify(m, k, 4) for m, k in ASTEROIDS]
    elapsed = time.perf_counter() - start
    checks = sum(sum(r.checks.values()) for r in reps)
    bad = _failures(reps)
    return (bad == 0 and elapsed < 120,
            f"{checks} checks, {bad} failures, {elapsed:.1f}s (limit 120s)")


def check_5():
    reps = [verify_oracle("oracle-diff", m, k, 4) for m, k in PONG]
    n = sum(r.checks["oracle-diff"] for r in reps)
    bad = _failures(reps)
    return bad == 0, f"{n} generators compared, {bad} mismatches"


def check_6():
    reps = [verify_oracle("oracle-mul", m, k, 3) for m, k in PONG]
    n = sum(r.checks["oracle-mul"] for r in reps)
    bad = _failures(reps)
    return bad == 0, f"{n} composable pairs compared, {bad} mismatches"


def check_7():
    reps = [verify_oracle(s, m, k, 3) for s in ("euler", "order") for m, k in PONG]
    totals = {}
    for r in reps:
        for name, n in r.checks.items():
            totals[name] = totals.get(name, 0) + n
    bad = _failures(reps)
    summary = ", ".join(f"{k}={v}" for k, v in sorted(totals.items()))
    return bad == 0, f"{bad} failures; {summary}"


def _random_element(rng):
    if rng.random() < 0.5:
        m = rng.randint(2, 5)
        k = rng.randint(1, m - 1)
        gens = core.enumerate_generators(m, k, 3)
    else:
        m = rng.randint(1, 4)
        k = rng.randint(1, m)
        gens = asteroids.enumerate_generators(m, k, 3)
    el = Element()
    for g in rng.sample(gens, min(len(gens), rng.randint(0, 4))):
        for _ in range(rng.randint(1, 3)):
            mono = tuple(rng.randint(0, 4) for _ in range(m))
            if mono not in el.terms.get(g, ()):
                el.iadd_term(g, mono)
    return el


def _verify_bytes(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(argv)
    obj = json.loads(buf.getvalue())
    obj.pop("wall_time", None)
    for r in obj.get("reports", ()):
        r.pop("wall_time")
    return dumps(obj)


def check_8():
    rng = random.Random(20240517)
    diffs = 0
    for _ in range(1000):
        el = _random_element(rng)
        text = dumps(element_to_record(el))
        back = record_to_element(json.loads(text))
        if back != el or dumps(element_to_record(back)) != text:
            diffs += 1
    argv = ["verify", "--suite", "all", "--m", "3", "--k", "2", "--max-disp", "2"]
    runs = {_verify_bytes(argv) for _ in range(3)}
    runs.add(_verify_bytes(argv + ["--jobs", "2"]))
    ok = diffs == 0 and len(runs) == 1
    return ok, f"1000 round trips, {diffs} diffs; {len(runs)} distinct verify outputs"


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8]


@pytest.mark.parametrize("n", range(1, 9), ids=lambda n: f"criterion_{n}")
def test_criterion(capsys, n):
    ok, detail = CHECKS[n - 1]()
    report(capsys, n, ok, detail)


if __name__ == "__main__":
    for n, check in enumerate(CHECKS, 1):
        ok, detail = check()
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
