import pytest

from pantsloop.catalog import LINKS
from pantsloop.curves import curve_from_sides, geometric_intersection, homology_class, torus_curve
from pantsloop.encode import (
    EncodingError,
    SurfaceFramedLink,
    build_loop,
    build_stages,
    expected_invariants,
    neighbourhood_boundary,
    verify_encoding,
)
from pantsloop.four_manifold import invariants, make_loop
from pantsloop.pants import classify_edge, standard_decomposition

CP2 = SurfaceFramedLink(1, 0, (torus_curve(0, 1),), (torus_curve(1, 0),))


def test_empty_link_gives_s4():
    link = SurfaceFramedLink(1, 0, (), ())
    lp = build_loop(link)
    assert verify_encoding(link, lp).ok
    inv = invariants(lp)
    assert (inv.euler, inv.signature, inv.h1_invariant_factors) == (2, 0, ())


def test_torus_link_gives_cp2():
    lp = build_loop(CP2)
    assert verify_encoding(CP2, lp).ok
    inv = invariants(lp)
    assert (inv.euler, abs(inv.signature), inv.h1_invariant_factors) == (3, 1, ())


@pytest.mark.parametrize("g,k,h1", [(1, 1, "Z"), (2, 0, "0"), (2, 1, "Z"), (2, 2, "Z^2")])
def test_one_handles_only(g, k, h1):
    link = SurfaceFramedLink(g, k, (), ())
    lp = build_loop(link)
    inv = invariants(lp)
    assert inv.h1_text() == h1
    assert inv.euler == 2 - 2 * k
    assert verify_encoding(link, lp).ok


def test_s_count_of_first_three_walks():
    w1, w2, w3, _ = build_stages(CP2)
    body = w1 + w2[1:] + w3[1:]
    s = sum(classify_edge(a, b).kind == "S" for a, b in zip(body, body[1:]))
    assert s == (1 - CP2.k) + len(CP2.link_curves)


def test_a_walk_has_only_a_edges():
    link = SurfaceFramedLink(2, 0, (), ())
    _, w2, _, _ = build_stages(link)
    assert all(classify_edge(a, b).kind == "A" for a, b in zip(w2, w2[1:]))


def test_loop_starts_at_standard_decomposition():
    assert build_loop(CP2).vertices[0] == standard_decomposition(1)


def test_dual_must_meet_link_once():
    link = SurfaceFramedLink(1, 0, (torus_curve(0, 1),), (torus_curve(2, 1),))
    with pytest.raises(EncodingError, match="dual curve must meet its link curve once"):
        build_loop(link)


def test_dual_must_bound_disk_in_q():
    link = SurfaceFramedLink(1, 1, (torus_curve(1, 0),), (torus_curve(0, 1),))
    with pytest.raises(EncodingError, match="bound a disk"):
        build_loop(link)


def test_k_out_of_range():
    with pytest.raises(EncodingError):
        build_loop(SurfaceFramedLink(1, 2, (), ()))


def test_extra_s_leaf_is_reported():
    lp = build_loop(CP2)
    v = list(lp.vertices)
    other = [p for p in (v[1],) if classify_edge(v[0], p).kind == "S"]
    assert other
    padded = make_loop([v[0], other[0]] + v)
    report = verify_encoding(CP2, padded)
    assert not report.ok
    assert [c[0] for c in report.mismatches()] == ["chi"]
    assert "MISMATCH" in report.text()


def test_expected_invariants_of_cp2_input():
    assert expected_invariants(CP2) == (3, ())


def test_neighbourhood_boundary_is_separating():
    x = curve_from_sides(2, (1,))
    z = curve_from_sides(2, (0, 4))
    s = neighbourhood_boundary(x, z)
    assert not any(homology_class(s))
    assert geometric_intersection(s, x) == geometric_intersection(s, z) == 0


def test_every_bundled_link_encodes(cat):
    for name in LINKS:
        link = cat[name].value
        lp = build_loop(link)
        report = verify_encoding(link, lp)
        assert report.ok, (name, report.text())


def test_genus2_two_component_link():
    a1, b1, a2, b2 = (curve_from_sides(2, (k,)) for k in (1, 2, 5, 6))
    link = SurfaceFramedLink(2, 0, (b1, b2), (a1, a2))
    inv = invariants(build_loop(link))
    assert (inv.euler, abs(inv.signature), inv.h1_text()) == (4, 2, "0")
