"""Acceptance criteria, one test per criterion.

Each test is tagged with ``@pytest.mark.criterion``; the conftest prints one
PASS/FAIL line per criterion at the end of the run. Comparisons are exact.
"""

import io
import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from foldchi import dot, graphio
from foldchi.cli import run
from foldchi.corpus import exhaustive_graphs, random_graph, random_sphere_graph
from foldchi.eulercalc import (
    extension_obstruction,
    fiber_euler,
    fiber_euler_by_walk,
    simply_connected_mod2,
    total_euler,
    total_euler_mod2,
)
from foldchi.foldcore import MAX_PLUS, Codim, make_graph
from foldchi.mfunctions import (
    DiffeoKind,
    diffeotype,
    euler_from_handles,
    generate_surface_mfunction,
    handle_decomposition,
    valid_sequences,
)
from foldchi.plumbing import Mat2Z, compose_factors, factor_attaching
from foldchi.roundfold import target_graph_from_round

HERE = Path(__file__).parent
FIX = HERE / "fixtures"
GOLD = HERE / "golden"

# trees up to isomorphism with <= 5 edges, every labelling, n - k in 2..5
CHI_VALUES = (-2, -1, 0, 1, 2, 3)


def corpus():
    yield from exhaustive_graphs(5, fiber_dims=(2, 3, 4, 5), chi_range=CHI_VALUES)
    rng = random.Random(20240601)
    for _ in range(1000):
        yield random_graph(rng, max_edges=30)


@pytest.fixture(scope="module")
def graphs():
    return list(corpus())


def test_corpus_size(graphs):
    tree_counts = [1, 1, 2, 4, 9, 20]
    expected = sum(4 * c * 4**m for m, c in enumerate(tree_counts)) + 1000
    assert len(graphs) == expected == 93308


@pytest.mark.criterion(1, "fiber formula == fiber walk")
def test_criterion_1_fiber_oracle(graphs):
    start = time.perf_counter()
    checked = 0
    for g in graphs:
        for v in g.vertices:
            assert fiber_euler(g, v) == fiber_euler_by_walk(g, v), (g, v)
            checked += 1
    assert checked > 400_000
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(2, "D^n model has chi = 1")
def test_criterion_2_disk_anchor():
    for k in range(2, 9):
        chi_s = 1 + (-1) ** (k - 1)  # chi(S^{k-1})
        for n in range(k + 2, k + 6):
            g = make_graph(n, k, {"out": 0, "in": 1}, "out", [("out", "in", "min+", chi_s)])
            assert total_euler(g) == 1, (n, k)
            assert total_euler(target_graph_from_round(Codim(n, k), ["min+"])) == 1


@pytest.mark.criterion(3, "total_euler and the mod 2 formula agree")
def test_criterion_3_mod2(graphs):
    for g in graphs:
        assert total_euler(g) % 2 == total_euler_mod2(g), g


@pytest.mark.criterion(4, "simply connected mod 2 formula agrees, k = 3")
def test_criterion_4_simply_connected():
    rng = random.Random(1729)
    count = 0
    for n in (5, 7):
        for _ in range(500):
            g = random_sphere_graph(rng, n, max_edges=30)
            assert simply_connected_mod2(g) == total_euler_mod2(g), g
            count += 1
    assert count >= 500


@pytest.mark.criterion(5, "S^4 extension anchor")
def test_criterion_5_extension():
    g = graphio.parse_target_graph_json((FIX / "s4_extension.json").read_text())
    ok = extension_obstruction(2, g)
    assert ok.consistent and str(ok) == "Consistent(1)"
    bad = extension_obstruction(6, g)
    assert bad.obstructed and (bad.lhs, bad.rhs) == (Fraction(3), 1)
    assert str(bad) == "Obstructed(3, 1)"
    for chi in range(-21, 22, 2):
        v = extension_obstruction(chi, g)
        assert v.obstructed and v.lhs == Fraction(chi, 2)


@pytest.mark.criterion(6, "k = 1 handles agree with the diffeomorphism type")
def test_criterion_6_handles():
    start = time.perf_counter()
    for n in range(2, 8):
        seen = 0
        for seq in valid_sequences(n, 10):
            seen += 1
            chi = euler_from_handles(handle_decomposition(seq))
            d = diffeotype(seq)
            if n == 2:
                assert d.kind is DiffeoKind.PLANAR_SURFACE
                assert chi == 2 - d.count
            else:
                assert d.kind is DiffeoKind.SPHERE_MINUS_BALLS
                assert d.count == seq.count(MAX_PLUS) + 1
                assert chi == (1 + (-1) ** n) - d.count * (-1) ** n
        # lengths 2..10, two interior choices per slot
        assert seen == sum(2 ** (length - 2) for length in range(2, 11))
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(7, "surface generator totals 2 - 2g - s - b")
def test_criterion_7_surfaces():
    for g, s, b in itertools.product(range(5), range(5), range(1, 5)):
        dec = generate_surface_mfunction(g, s, b)
        assert sum(block.euler for block in dec.blocks) == 2 - 2 * g - s - b
        assert dec.euler == 2 - 2 * g - s - b


def _random_det_minus_one(rng, bound):
    while True:
        p, r = rng.randint(-bound, bound), rng.randint(-bound, bound)
        x, y, gcd = _ext_gcd(p, r)
        if gcd != 1:
            continue
        m = Mat2Z(p, y, r, -x)  # det = -(p x + r y) = -1
        if rng.random() < 0.5:
            m = Mat2Z(m.a, m.c, m.b, m.d)
        return m


def _ext_gcd(a, b):
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_s, old_t, old_r


@pytest.mark.criterion(8, "compose(factor(A)) == A")
def test_criterion_8_plumbing_round_trip():
    start = time.perf_counter()
    box = range(-20, 21)
    count = 0
    for a, b, c, d in itertools.product(box, repeat=4):
        if a * d - b * c != -1:
            continue
        m = Mat2Z(a, b, c, d)
        assert compose_factors(factor_attaching(m)) == m, m
        count += 1
    assert count == 4084
    rng = random.Random(31337)
    for _ in range(500):
        m = _random_det_minus_one(rng, 10**6)
        assert max(abs(m.a), abs(m.b), abs(m.c), abs(m.d)) <= 10**6
        assert m.det() == -1
        assert compose_factors(factor_attaching(m)) == m, m
    assert time.perf_counter() - start < 60


def _call(*argv):
    out, err = io.StringIO(), io.StringIO()
    return run(list(argv), stdout=out, stderr=err), out.getvalue()


@pytest.mark.criterion(9, "JSON round trip, DOT goldens, exit codes")
def test_criterion_9_io(graphs):
    for g in graphs:
        assert graphio.parse_target_graph_json(graphio.serialize_target_graph(g)) == g

    d4 = graphio.parse_target_graph_json((FIX / "d4.json").read_text())
    golden = (GOLD / "d4.dot").read_bytes()
    cmd = [sys.executable, "-m", "foldchi.cli", "export-dot", str(FIX / "d4.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second == golden == dot.emit_dot(d4).encode()

    assert _call("euler", str(FIX / "d4.json")) == (0, "1\n")
    assert _call("extension-check", "--chi", "6", str(FIX / "s4_extension.json")) == (1, "Obstructed(3, 1)\n")
    assert _call("plumb", "compose", "[]") == (0, "[[0, 1], [1, 0]]\n")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
