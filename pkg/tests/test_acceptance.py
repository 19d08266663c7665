"""One test per acceptance criterion; a PASS/FAIL line for each is printed at the end."""
import itertools
import re
import subprocess
import sys
import time
from collections import defaultdict
from contextlib import contextmanager
from decimal import Decimal
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE
from reference_values import AMPLITUDE, F50, F_SHAPES, F_TABLE, G_TABLE, LOWER_RATE_11
from thompson_growth import algorithm_a, algorithm_b, forest_core
from thompson_growth.algorithm_b import (
    LEFT, RIGHT, HalfState, creates_common_caret, enumerate_padded_reference, successors,
)
from thompson_growth.forest_core import (
    bfs_ball, bfs_sphere_counts, canonical_key, column_weight, diagram_of, weight,
)
from thompson_growth.series_analysis import (
    amplitude_fit, doubling_estimates, fekete_bounds, fraction_decimal, lower_bound_rate,
)
from thompson_growth.tree_codec import all_trees, carets, count_trees, decode_word, encode_tree

B_MAX = 500
A_MAX = 14


@contextmanager
def criterion(k, desc):
    notes = []
    try:
        yield notes
    except BaseException:
        ACCEPTANCE[k] = (desc, False, "; ".join(notes))
        raise
    ACCEPTANCE[k] = (desc, True, "; ".join(notes))


@pytest.fixture(scope="module")
def b_run():
    t = time.perf_counter()
    values = algorithm_b.growth_series(B_MAX).values
    return values, time.perf_counter() - t


@pytest.fixture(scope="module")
def a_run():
    t = time.perf_counter()
    totals, geodesics = algorithm_a.exact_totals(A_MAX)
    return totals, geodesics, time.perf_counter() - t


def shape(v):
    s = str(v)
    return len(s), s[:4], s[-4:]


def test_criterion_01_element_table(a_run):
    with criterion(1, "f(n) table: B for n <= 22, A for n <= 14") as notes:
        t = time.perf_counter()
        fb = algorithm_b.growth_series(22).values
        tb = time.perf_counter() - t
        notes.append(f"B to 22 in {tb:.2f}s")
        assert fb == F_TABLE
        assert (fb[5], fb[10], fb[12], fb[22]) == (314, 56664, 431238, 9035758992)
        assert tb < 5
        totals, _, ta = a_run
        notes.append(f"A to 14 in {ta:.0f}s")
        assert [int(x) for x in totals] == F_TABLE[:A_MAX + 1]
        assert totals[14] == 3225940


def test_criterion_02_geodesic_table(a_run):
    with criterion(2, "g(n) table from A for n <= 14"):
        _, g, _ = a_run
        assert g == G_TABLE[:A_MAX + 1]
        assert (g[5], g[9], g[14]) == (324, 23608, 4507524)


def test_criterion_03_deep_series(b_run):
    with criterion(3, "B deep series: f(50), digit shapes at 100, 200, 500") as notes:
        f, tb = b_run
        notes.append(f"B to {B_MAX} in {tb:.0f}s")
        assert f[50] == F50
        for n in (100, 200, 500):
            assert shape(f[n]) == F_SHAPES[n], n
        for N in (10, 22, 50):
            assert algorithm_b.growth_series(N, prune=True).values == f[:N + 1]


@pytest.mark.extended
def test_extended_1500():
    f = algorithm_b.growth_series(1500, prune=True).values
    assert shape(f[1000]) == F_SHAPES[1000]
    assert shape(f[1500]) == F_SHAPES[1500]
    assert str(fekete_bounds(f[:1501], 10, check=False)[-1].upper).startswith("2.62167")


def test_criterion_04_bounds_and_ratios(b_run):
    with criterion(4, "Fekete bound at 22, ratios at 200 and 500, all bounds above the lower rate"):
        f, _ = b_run
        assert str(fekete_bounds(F_TABLE, 8)[-1].upper) == "2.8349398"
        assert str(fraction_decimal(Fraction(f[200], f[199]), 7)) == "2.618034"
        assert str(fraction_decimal(Fraction(f[500], f[499]), 17)) == "2.6180339887498949"
        lower = Decimal(LOWER_RATE_11)
        reports = fekete_bounds(f, 15)
        assert all(r.upper > lower for r in reports)


def test_criterion_05_oracle():
    with criterion(5, "BFS oracle: f(n) for n <= 10, length = BFS distance on the radius-8 ball") as notes:
        t = time.perf_counter()
        assert bfs_sphere_counts(10).values == F_TABLE[:11]
        for n, sphere in enumerate(bfs_ball(8)):
            for d, w in sphere.values():
                assert weight(d) == n
                assert forest_core.geodesic_length(w) == n
        dt = time.perf_counter() - t
        notes.append(f"{dt:.1f}s")
        assert dt < 60


def test_criterion_06_integrality(a_run):
    with criterion(6, "exact sphere sums are integers for n <= 14; per-element sums are 1 for n <= 6"):
        totals, _, _ = a_run
        assert all(isinstance(x, Fraction) and x.denominator == 1 for x in totals)
        for n in range(1, 7):
            sums = defaultdict(Fraction)
            for w, p in algorithm_a.weighted_geodesics(n):
                sums[canonical_key(diagram_of(w))] += p
            assert len(sums) == F_TABLE[n]
            assert all(v == 1 for v in sums.values())


def test_criterion_07_codec():
    with criterion(7, "codec round trip to 7 carets, tree counts, six-caret word"):
        for k in range(8):
            ts = list(all_trees(k))
            for t in ts:
                assert decode_word(encode_tree(t)) == t
        assert len(list(all_trees(7))) == 429
        assert count_trees(7) == [1, 1, 2, 5, 14, 42, 132]
        assert count_trees(7) == [len(list(all_trees(l - 1))) for l in range(1, 8)]
        w = "nInNiInNnIiI"
        t = decode_word(w)
        assert encode_tree(t) == w
        assert carets(t) == 6


def _states():
    yield HalfState("L", LEFT, 0)
    yield HalfState("R", RIGHT, 0)
    yield HalfState("X", RIGHT, 0)
    for side in (LEFT, RIGHT):
        for h in range(5):
            yield HalfState("I", side, h)
            if h:
                yield HalfState("N", side, h)


def test_criterion_08_transition_structure():
    with criterion(8, "transition cardinalities, no R to I, rejected pairs, write window, symmetry"):
        S = HalfState
        assert len(successors(S("L", LEFT, 0))) == 7
        assert len(successors(S("R", RIGHT, 0))) == 2
        assert len(successors(S("X", RIGHT, 0))) == 2
        assert len(successors(S("I", LEFT, 0))) == 3
        assert len(successors(S("I", RIGHT, 0))) == 4
        assert all(len(successors(s)) == 4 for s in _states() if s.excess > 0)
        assert all(t.label != "I" for t in successors(S("R", RIGHT, 0)))
        rejected = set()
        for s, t in itertools.product(_states(), repeat=2):
            for s2 in successors(s):
                for t2 in successors(t):
                    if creates_common_caret(s, t, s2, t2):
                        assert (s2.label, t2.label) == ("I", "I")
                        rejected.add((s.label, t.label))
        assert rejected == set(itertools.product("LNX", repeat=2))
        enumerate_padded_reference(40)  # raises if any write leaves [n+1, n+4]
        for x in "LNIRX":
            for y in "LNIRX":
                assert column_weight(x, y) == column_weight(y, x)


def test_criterion_09_asymptotics(b_run):
    with criterion(9, "amplitude at N=300 within 1% of 8.02374; doubling at 100 within 1e-3") as notes:
        f, _ = b_run
        fit = amplitude_fit(f[:301], lower_bound_rate(40))
        notes.append(f"A = {float(fit.amplitude):.6f}")
        assert abs(float(fit.amplitude) - AMPLITUDE) / AMPLITUDE < 0.01
        d = doubling_estimates(f[:201])[100]
        assert abs(d - Decimal(LOWER_RATE_11)) < Decimal("1e-3")


def test_criterion_10_determinism(tmp_path):
    with criterion(10, "b-file output byte-identical across runs; grammar 'n value' lines"):
        outs = []
        for k in range(2):
            p = tmp_path / f"b{k}.txt"
            r = subprocess.run([sys.executable, "-m", "thompson_growth", "count", "--method", "b",
                                "--max-n", "50", "--format", "bfile", "--out", str(p)])
            assert r.returncode == 0
            outs.append(p.read_bytes())
        assert outs[0] == outs[1]
        assert re.fullmatch(rb"(?:(\d+) (\d+)\n)*", outs[0])
        lines = outs[0].decode("ascii").splitlines()
        assert [int(l.split()[0]) for l in lines] == list(range(51))
