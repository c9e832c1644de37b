import pytest

from pantsloop.cobordism import (
    CellError,
    DiskCertificate,
    TwoCellCertificate,
    apply_replacement,
    leaf_sequence,
    ledger_effect,
    reduce,
    remove_leaf,
    signed_3s_count,
    validate_cell,
)
from pantsloop.curves import torus_curve
from pantsloop.four_manifold import invariants, make_loop
from pantsloop.pants import pants_from_curves


def torus(*slopes):
    return tuple(pants_from_curves(1, [torus_curve(*v)]) for v in slopes)


TRI = torus((1, 1), (1, 0), (0, 1))


def test_cp2_reduction(cat):
    ledger = reduce(cat["cp2-triangle"].value, cat["cp2-disk"].value)
    assert [s for s, _ in ledger.steps] == ["BlowdownPlus", "Surgery1", "CapOff"]
    assert ledger.final_class == (1, 0)
    assert ledger.text().endswith("class m=1 n=0\n")


def test_cp2bar_reduction(cat):
    ledger = reduce(cat["cp2bar-triangle"].value, cat["cp2bar-disk"].value)
    assert ledger.final_class == (0, 1)


def test_3s_split_shapes():
    one_for_two = validate_cell(TwoCellCertificate("3S", TRI, (0, 2)))
    two_for_one = validate_cell(TwoCellCertificate("3S", TRI, (0, 1)))
    assert one_for_two.orientation_sign == 1
    assert ledger_effect(one_for_two).startswith("Blowdown")
    assert ledger_effect(two_for_one).startswith("Blowup")


def test_3s_orientation_sign_must_match():
    with pytest.raises(CellError, match="orientation sign"):
        validate_cell(TwoCellCertificate("3S", TRI, (0, 2), orientation_sign=-1))


def test_a_cells_are_products(cat):
    disk = cat["a-triangle-g2-disk"].value
    assert ledger_effect(disk.steps[0][0]) == "Product"
    ledger = reduce(cat["a-triangle-g2"].value, disk)
    assert {s for s, _ in ledger.steps} == {"Product", "CapOff"}
    assert ledger.final_class == (0, 0)


def test_4s_three_for_one_is_surgery(cat):
    cell = cat["genus2-4s-disk"].value.steps[0][0]
    assert ledger_effect(cell) == "Surgery1"
    assert ledger_effect(cell.inverse()) == "Surgery2"


def test_4s_two_for_two_is_product(cat):
    cell = cat["genus2-4s-disk"].value.steps[0][0]
    even = TwoCellCertificate("4S", cell.boundary, (0, 2))
    assert ledger_effect(validate_cell(even)) == "Product"


def test_replacement_then_inverse_restores_loop(cat):
    for loop_name, disk_name in [("cp2-triangle", "cp2-disk"), ("s2xs2-loop", "s2xs2-disk")]:
        lp = cat[loop_name].value
        cell, pos = cat[disk_name].value.steps[0]
        after = apply_replacement(lp, cell, pos)
        back = apply_replacement(after, cell.inverse(), pos)
        k = back.vertices.index(lp.vertices[0])
        assert back.rotated(k).vertices == lp.vertices


def test_segment_mismatch():
    cell = validate_cell(TwoCellCertificate("3S", TRI, (0, 2)))
    with pytest.raises(CellError, match="segment mismatch"):
        apply_replacement(make_loop(TRI), cell, 1)


def test_improper_split_rejected():
    with pytest.raises(CellError, match="split must be proper"):
        validate_cell(TwoCellCertificate("3S", TRI, (0, 3)))


def test_wrong_cell_type_pattern(cat):
    square = cat["genus2-4s-disk"].value.steps[0][0].boundary
    with pytest.raises(CellError):
        validate_cell(TwoCellCertificate("4AS", square, (0, 1)))
    with pytest.raises(CellError):
        validate_cell(TwoCellCertificate("3A", TRI, (0, 1)))


def test_remove_s_leaf():
    lp = make_loop(torus((1, 0), (0, 1)))
    shorter, step, kind = remove_leaf(lp, 0)
    assert (len(shorter.vertices), step, kind) == (1, "Surgery1", "S")


def test_remove_a_leaf(cat):
    cell = cat["a-triangle-g2-disk"].value.steps[0][0]
    lp = make_loop([cell.boundary[0], cell.boundary[1]])
    _, step, kind = remove_leaf(lp, 0)
    assert (step, kind) == ("Product", "A")


def test_non_leaf_position():
    with pytest.raises(CellError, match="no back-and-forth"):
        remove_leaf(make_loop(TRI), 0)


def test_leaf_sequence_none_for_real_cycle():
    assert leaf_sequence(make_loop(TRI)) is None


def test_incomplete_disk_rejected():
    with pytest.raises(CellError, match="constant loop"):
        reduce(make_loop(TRI), DiskCertificate((), ()))


def test_wrong_leaf_kind(cat):
    disk = cat["cp2-disk"].value
    bad = DiskCertificate(disk.steps, (("A", 0),))
    with pytest.raises(CellError, match="certificate says A"):
        reduce(cat["cp2-triangle"].value, bad)


def test_signed_count_with_opposite_triangles():
    pos = validate_cell(TwoCellCertificate("3S", TRI, (0, 2)))
    neg = validate_cell(TwoCellCertificate("3S", tuple(reversed(TRI)), (0, 2)))
    assert signed_3s_count(DiskCertificate(((pos, 0),), ())) == (1, 1)
    assert signed_3s_count(DiskCertificate(((pos, 0), (neg, 0)), ())) == (0, 2)


def test_ledger_steps_track_running_invariants(cat):
    lp = cat["s2xs2-loop"].value
    cell, pos = cat["s2xs2-disk"].value.steps[0]
    after = apply_replacement(lp, cell, pos)
    before, now = invariants(lp), invariants(after)
    assert ledger_effect(cell) == "Surgery1"
    assert (now.euler - before.euler, now.signature - before.signature) == (-2, 0)


def test_hexagon_is_pattern_checked(cat):
    cell = cat["6as-hexagon-cell"].value.steps[0][0]
    assert validate_cell(cell).residual_trust
