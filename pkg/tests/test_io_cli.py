import pytest
from click.testing import CliRunner

from pantsloop import io
from pantsloop.catalog import LOOP_DISK_PAIRS, catalog
from pantsloop.cli import main
from pantsloop.cobordism import validate_cell


def _write(e):
    if e.kind == "loop":
        return io.write_loop(e.value)
    if e.kind == "disk":
        return io.write_disk(e.genus, e.value)
    return io.write_link(e.value)


def _read(kind, text):
    if kind == "loop":
        return io.read_loop(text)
    if kind == "disk":
        return io.read_disk(text)[1]
    return io.read_link(text)


@pytest.mark.parametrize("name", sorted(catalog()))
def test_catalog_round_trip(cat, name):
    e = cat[name]
    text = _write(e)
    back = _read(e.kind, text)
    if e.kind == "link":
        assert back.validate() == e.value.validate()
    elif e.kind == "disk":
        assert [(validate_cell(c), p) for c, p in back.steps] == list(e.value.steps)
        assert back.terminal_tree_phase == e.value.terminal_tree_phase
    else:
        assert back == e.value
    assert _write(type(e)(e.kind, e.genus, back)) == text


def test_reverse_orientation_reads_reversed(cat):
    text = io.write_loop(cat["cp2-triangle"].value).replace("orientation forward", "orientation reverse")
    assert io.read_loop(text) == cat["cp2-triangle"].value.reversed()


def test_comments_and_blank_lines_are_ignored(cat):
    text = io.write_loop(cat["cp2-triangle"].value)
    noisy = "# a comment\n\n" + text.replace("\nvertex", "\n\n# next\nvertex")
    assert io.read_loop(noisy) == cat["cp2-triangle"].value


@pytest.mark.parametrize(
    "text, where",
    [
        ("", "line 1 field header"),
        ("pantsloop-disk\ngenus 1\n", "line 1 field header"),
        ("pantsloop-loop\ngenus x\n", "line 2 field genus"),
        ("pantsloop-loop\ngenus 1\norientation sideways\n", "line 3 field orientation"),
        ("pantsloop-loop\ngenus 1\norientation forward\nvertex (9,9)\n", "line 4 field vertex"),
        ("pantsloop-loop\ngenus 1\norientation forward\n", "field vertex"),
    ],
)
def test_loop_errors_cite_line_and_field(text, where):
    with pytest.raises(io.FormatError, match=where):
        io.read_loop(text)


def test_disk_errors_cite_line_and_field(cat):
    text = io.write_disk(1, cat["cp2-disk"].value)
    with pytest.raises(io.FormatError, match="line 3 field cell"):
        io.read_disk(text.replace("cell 3S", "cell 7Q"))
    with pytest.raises(io.FormatError, match="line 7 field leaf"):
        io.read_disk(text.replace("leaf S", "leaf X"))
    with pytest.raises(io.FormatError, match="field boundary"):
        io.read_disk("\n".join(text.splitlines()[:5]) + "\n")


def test_link_errors_cite_line_and_field(cat):
    text = io.write_link(cat["cp2-link"].value)
    with pytest.raises(io.FormatError, match="line 3 field k"):
        io.read_link(text.replace("k 0", "k zero"))
    with pytest.raises(io.FormatError, match="field dual"):
        io.read_link("\n".join(l for l in text.splitlines() if not l.startswith("dual")) + "\n")


# ------------------------------------------------------------ cli


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)

    return invoke


def test_invariants_command(run):
    res = run("invariants", "cp2-triangle")
    assert res.exit_code == 0
    assert res.output.strip() == "chi=3 sigma=1 H1=0"
    assert run("invariants", "s2xs2-loop").output.strip() == "chi=4 sigma=0 H1=0"


def test_invariants_out_file(run, tmp_path):
    out = tmp_path / "inv.txt"
    run("invariants", "genus2-3s", "--out", str(out))
    assert out.read_text() == "invariants\nchi 1\nsigma 1\nH1 Z\n"


def test_validate_files_and_names(run, tmp_path):
    res = run("examples", "--dir", str(tmp_path))
    assert res.exit_code == 0
    files = sorted(tmp_path.iterdir())
    assert len(files) == len(catalog())
    for f in files:
        res = run("validate", str(f))
        assert res.exit_code == 0, res.output
        assert res.output.startswith("OK ")
    assert run("validate", "cp2-link").output.strip() == "OK link genus 1"


def test_genus_mismatch_exits_1(run):
    res = run("invariants", "cp2-triangle", "--genus", "2")
    assert res.exit_code == 1
    assert "expected 2" in res.output


def test_unknown_name_exits_1(run):
    res = run("invariants", "no-such-example")
    assert res.exit_code == 1
    assert "error: FileNotFoundError" in res.output


def test_wrong_kind_exits_1(run):
    res = run("invariants", "cp2-disk")
    assert res.exit_code == 1
    assert "expected a loop" in res.output


def test_bad_file_exits_1(run, tmp_path):
    f = tmp_path / "bad.loop"
    f.write_text("pantsloop-loop\ngenus 1\norientation forward\nvertex (9,9)\n")
    res = run("invariants", str(f))
    assert res.exit_code == 1
    assert "line 4 field vertex" in res.output


def test_edge_command(run):
    assert run("edge", "cp2-triangle", "0").output.strip() == "edge 0 S #0(S1xS2)"
    assert run("edge", "cp2-triangle", "5").exit_code == 1


def test_reduce_command(run, tmp_path):
    out = tmp_path / "ledger.txt"
    res = run("reduce", "cp2-triangle", "cp2-disk", "--out", str(out))
    assert res.exit_code == 0
    assert out.read_text().rstrip().endswith("class m=1 n=0")


def test_encode_command(run, tmp_path):
    out = tmp_path / "enc.loop"
    res = run("encode", "cp2-link", "--out", str(out))
    assert res.exit_code == 0
    assert "encoding verified" in res.output
    assert run("invariants", str(out)).output.split()[0] == "chi=3"


def test_export_kirby_command(run):
    res = run("export-kirby", "genus2-4s")
    assert res.exit_code == 0 and res.output


@pytest.mark.parametrize(
    "args",
    [
        ("invariants", "a-pentagon-g2"),
        ("reduce", "s2xs2-loop", "s2xs2-disk"),
        ("export-kirby", "s4-loop"),
        ("encode", "cp2-link-g2"),
    ],
)
def test_output_is_deterministic(run, args):
    assert run(*args).output == run(*args).output


def test_every_loop_disk_pair_reduces_from_files(run, tmp_path):
    run("examples", "--dir", str(tmp_path))
    for loop, disk in LOOP_DISK_PAIRS:
        res = run("reduce", str(tmp_path / f"{loop}.loop"), str(tmp_path / f"{disk}.disk"))
        assert res.exit_code == 0, (loop, res.output)
