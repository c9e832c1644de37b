import pytest

from pantsloop.surface import build_model_surface, partner, side_edge, standard_homology_basis, symplectic_pairing


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_counts_and_euler_characteristic(g):
    s = build_model_surface(g).validate()
    assert s.num_vertices() == 1
    assert (s.num_edges, s.num_triangles) == (6 * g - 3, 4 * g - 2)
    assert s.euler_characteristic() == 2 - 2 * g


def test_partner_is_an_involution_within_a_handle():
    for k in range(12):
        assert partner(partner(k)) == k
        assert partner(k) // 4 == k // 4
        assert partner(k) != k


def test_partner_sides_share_an_edge_with_opposite_direction():
    for k in range(8):
        e1, f1 = side_edge(k)
        e2, f2 = side_edge(partner(k))
        assert e1 == e2 and f1 != f2


def test_bad_genus():
    with pytest.raises(ValueError):
        build_model_surface(0)


def test_pairing_is_standard():
    basis = standard_homology_basis(build_model_surface(2))
    assert basis.genus == 2
    assert (basis.pairing == symplectic_pairing(2)).all()
    a1, a2, b1, b2 = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    assert basis.psi(a1, b1) == 1 and basis.psi(b1, a1) == -1
    assert basis.psi(a1, b2) == 0 and basis.psi(a1, a2) == 0
