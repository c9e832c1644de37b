"""
End-to-end acceptance checks, one test per criterion.

Each test is named ``test_criterion_NN_<what>``; a PASS/FAIL line per
criterion is printed in the terminal summary (see conftest.py).
"""

import time
from itertools import permutations

import pytest

from lagrangian_gen import lagrangians
from lattice_oracle import primitive_slopes
from pantsloop.catalog import LINKS, LOOP_DISK_PAIRS, catalog
from pantsloop.cobordism import apply_replacement, ledger_effect, reduce, remove_leaf, signed_3s_count, validate_cell
from pantsloop.curves import canonical_curve, geometric_intersection, torus_curve
from pantsloop.encode import build_loop, verify_encoding
from pantsloop.four_manifold import (
    euler_characteristic,
    euler_characteristic_oracle,
    invariants,
    make_loop,
    signature,
)
from pantsloop.symplectic import maslov

# name -> (chi, sigma, H1 text)
EXPECTED = {
    "cp2-triangle": (3, 1, "0"),
    "cp2bar-triangle": (3, -1, "0"),
    "genus2-3s": (1, 1, "Z"),
    "genus2-4s": (2, 0, "0"),
    "a-only-g1": (0, 0, "Z"),
    "a-triangle-g2": (-2, 0, "Z^2"),
    "a-square-g2": (-4, 0, "Z^3"),
    "a-pentagon-g2": (-4, 0, "Z^3"),
    "s4-loop": (2, 0, "0"),
    "s2xs2-loop": (4, 0, "0"),
}

A_ONLY = {"a-only-g1": 1, "a-triangle-g2": 2, "a-square-g2": 3, "a-pentagon-g2": 3}


class Clock:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f} s, limit {self.limit} s"


def triple(loop):
    inv = invariants(loop)
    return inv.euler, inv.signature, inv.h1_text()


def rotations(loop):
    v = loop.vertices
    return [make_loop(v[i:] + v[:i]) for i in range(len(v))]


@pytest.fixture(scope="module")
def cat():
    return catalog()


def test_criterion_01_cp2_triangle(cat):
    with Clock(1.0):
        loop = cat["cp2-triangle"].value
        assert triple(loop) == (3, 1, "0")
        assert triple(loop.reversed()) == (3, -1, "0")


def test_criterion_02_genus2_3s_triangle(cat):
    with Clock(1.0):
        loop = cat["genus2-3s"].value
        assert triple(loop) == (1, 1, "Z")
        assert triple(loop.reversed()) == (1, -1, "Z")


def test_criterion_03_genus2_4s_square(cat):
    with Clock(1.0):
        assert triple(cat["genus2-4s"].value) == (2, 0, "0")


def test_criterion_04_a_only_loops(cat):
    assert sorted(set(A_ONLY.values())) == [1, 2, 3]
    for name, g in A_ONLY.items():
        with Clock(1.0):
            loop = cat[name].value
            assert loop.genus == g
            assert all(e.kind == "A" for e in loop.edges)
            free = "Z" if g == 1 else f"Z^{g}"
            assert triple(loop) == (2 - 2 * g, 0, free), name


def test_criterion_05_hexagon_pair(cat):
    with Clock(5.0):
        s4, s2xs2 = cat["s4-loop"].value, cat["s2xs2-loop"].value
        assert triple(s4) == (2, 0, "0")
        assert triple(s2xs2) == (4, 0, "0")
        (cell, position), = cat["6as-hexagon-cell"].value.steps
        cell = validate_cell(cell)
        assert cell.cell_type == "6AS"
        assert apply_replacement(s2xs2, cell, position) == s4


def test_criterion_06_signature_from_maslov_sums(cat):
    with Clock(10.0):
        for name, (_, sigma, _) in EXPECTED.items():
            loop = cat[name].value
            assert signature(loop) == sigma, name
            for r in rotations(loop):
                assert signature(r) == sigma, name
            assert signature(loop.reversed()) == -sigma, name
        for name, e in cat.items():
            if e.kind == "loop":
                sigmas = {signature(r) for r in rotations(e.value)}
                assert len(sigmas) == 1, name
                assert signature(e.value.reversed()) == -sigmas.pop(), name


def _parity(perm):
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def test_criterion_07_maslov_properties():
    with Clock(30.0):
        checked = 0
        for g in (1, 2):
            pool = lagrangians(g, 60, seed=g)
            quads = [pool[i : i + 4] for i in range(0, len(pool) - 3)]
            assert len(quads) >= 50
            for l1, l2, l3, l4 in quads:
                base = maslov(l1, l2, l3)
                for perm in permutations(range(3)):
                    args = [(l1, l2, l3)[i] for i in perm]
                    assert maslov(*args) == _parity(perm) * base
                assert maslov(l1, l1, l2) == maslov(l1, l2, l2) == maslov(l2, l1, l2) == 0
                assert (
                    maslov(l2, l3, l4) - maslov(l1, l3, l4) + maslov(l1, l2, l4) - maslov(l1, l2, l3)
                ) == 0
                checked += 1
        assert checked >= 100


_SIGMA_SHIFT = {
    "Product": 0,
    "Surgery1": 0,
    "Surgery2": 0,
    "BlowupPlus": 1,
    "BlowupMinus": -1,
    "BlowdownPlus": -1,
    "BlowdownMinus": 1,
}


def test_criterion_08_cobordism_reduction(cat):
    with Clock(30.0):
        for loop_name, disk_name in LOOP_DISK_PAIRS:
            loop, disk = cat[loop_name].value, cat[disk_name].value
            ledger = reduce(loop, disk)
            m, n = ledger.final_class
            assert m - n == signature(loop), loop_name
            # replay the certificate and check each step's effect on sigma
            current, sigma = loop, signature(loop)
            names = [s for s, _ in ledger.steps]
            for (cell, position), name in zip(disk.steps, names):
                current = apply_replacement(current, validate_cell(cell), position)
                assert name == ledger_effect(validate_cell(cell))
                new = signature(current)
                assert new - sigma == _SIGMA_SHIFT[name], (loop_name, name)
                sigma = new
            for (_, position), name in zip(disk.terminal_tree_phase, names[len(disk.steps) :]):
                current, step, _ = remove_leaf(current, position)
                assert step == name
                new = signature(current)
                assert new - sigma == _SIGMA_SHIFT[name], (loop_name, name)
                sigma = new
            assert not current.edges and sigma == 0


def test_criterion_09_3s_lower_bound(cat):
    with Clock(5.0):
        for loop_name, disk_name in LOOP_DISK_PAIRS:
            sigma = signature(cat[loop_name].value)
            signed, total = signed_3s_count(cat[disk_name].value)
            assert signed == sigma, loop_name
            assert total >= abs(sigma), loop_name


def test_criterion_10_torus_intersection_oracle():
    from lattice_oracle import lattice_crossings

    slopes = primitive_slopes(5)
    oracle = {(v, w): lattice_crossings(v, w) for v in slopes for w in slopes}
    assert all(oracle[(v, w)] == abs(v[0] * w[1] - v[1] * w[0]) for v, w in oracle)
    with Clock(10.0):
        curves = {v: canonical_curve(torus_curve(*v)) for v in slopes}
        for (v, w), expected in oracle.items():
            assert geometric_intersection(curves[v], curves[w]) == expected, (v, w)


def test_criterion_11_euler_formula_vs_oracle(cat):
    with Clock(5.0):
        loops = [e.value for e in cat.values() if e.kind == "loop"]
        assert loops
        for loop in loops:
            assert euler_characteristic(loop) == euler_characteristic_oracle(loop)


def test_criterion_12_encoder(cat):
    assert "empty-link-g1" in LINKS and "cp2-link" in LINKS
    with Clock(10.0):
        empty = cat["empty-link-g1"].value
        loop = build_loop(empty)
        assert verify_encoding(empty, loop).ok
        assert triple(loop) == (2, 0, "0")
        torus = cat["cp2-link"].value
        assert [c for c in torus.link_curves] == [torus_curve(0, 1)]
        assert [c for c in torus.dual_curves] == [torus_curve(1, 0)]
        loop = build_loop(torus)
        assert verify_encoding(torus, loop).ok
        chi, sigma, h1 = triple(loop)
        assert (chi, abs(sigma), h1) == (3, 1, "0")
