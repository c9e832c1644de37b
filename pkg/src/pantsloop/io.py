"""
Line-oriented text formats for loops, disk certificates and framed links.

Every file starts with a header word naming its kind, followed by
``genus N``.  Curves are written as their arc sequence ``(t,c) (t,c) ...``
and the curves of one pants decomposition are separated by ``|``.

Loop::

    pantsloop-loop
    genus 1
    orientation forward
    vertex (0,1) (1,2)
    vertex ...

Disk certificate (steps in order, then the leaf removals)::

    pantsloop-disk
    genus 1
    cell 3S split 0 2 position 0
    boundary <vertex>
    boundary <vertex>
    boundary <vertex>
    leaf S 0

Surface-framed link (``link`` and ``dual`` lines pair up in order)::

    pantsloop-link
    genus 2
    k 0
    link <curve>
    dual <curve>

Blank lines and lines starting with ``#`` are ignored.
"""

from .cobordism import CELL_SIZES, DiskCertificate, TwoCellCertificate
from .curves import CurveError, parse_curve
from .encode import SurfaceFramedLink
from .four_manifold import make_loop
from .pants import PantsError, pants_from_curves

LOOP_HEADER = "pantsloop-loop"
DISK_HEADER = "pantsloop-disk"
LINK_HEADER = "pantsloop-link"


class FormatError(ValueError):
    pass


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield n, line


def _fail(n, field, msg):
    raise FormatError(f"line {n} field {field}: {msg}")


def _int(n, field, word):
    try:
        return int(word)
    except ValueError:
        _fail(n, field, f"expected an integer, got {word!r}")


def _keyword(n, line, key):
    head, _, rest = line.partition(" ")
    if head != key:
        _fail(n, key, f"expected {key!r}, got {head!r}")
    return rest.strip()


def _curve(n, field, genus, text):
    try:
        return parse_curve(genus, text)
    except CurveError as exc:
        _fail(n, field, str(exc))


def _vertex(n, field, genus, text):
    curves = [_curve(n, field, genus, part) for part in text.split("|")]
    try:
        return pants_from_curves(genus, curves)
    except (PantsError, CurveError) as exc:
        _fail(n, field, str(exc))


def _header(text, kind):
    lines = list(_lines(text))
    if not lines:
        raise FormatError("line 1 field header: empty file")
    n, first = lines[0]
    if first != kind:
        _fail(n, "header", f"expected {kind!r}, got {first!r}")
    if len(lines) < 2:
        _fail(n, "genus", "missing genus line")
    n, line = lines[1]
    genus = _int(n, "genus", _keyword(n, line, "genus"))
    if genus < 1:
        _fail(n, "genus", "genus must be at least 1")
    return genus, lines[2:]


def file_kind(text):
    for _, line in _lines(text):
        return line
    return None


def format_vertex(p):
    return " | ".join(c.serialize() for c in p.curves)


# ------------------------------------------------------------ loops


def write_loop(loop):
    lines = [LOOP_HEADER, f"genus {loop.genus}", "orientation forward"]
    lines += [f"vertex {format_vertex(p)}" for p in loop.vertices]
    return "\n".join(lines) + "\n"


def read_loop(text):
    genus, lines = _header(text, LOOP_HEADER)
    if not lines:
        raise FormatError("line 3 field orientation: missing orientation line")
    n, line = lines[0]
    orientation = _keyword(n, line, "orientation")
    if orientation not in ("forward", "reverse"):
        _fail(n, "orientation", f"expected forward or reverse, got {orientation!r}")
    vertices = [_vertex(n, "vertex", genus, _keyword(n, line, "vertex")) for n, line in lines[1:]]
    if not vertices:
        _fail(n, "vertex", "loop needs at least one vertex")
    loop = make_loop(vertices)
    return loop.reversed() if orientation == "reverse" else loop


# ------------------------------------------------------------ disks


def write_disk(genus, disk):
    lines = [DISK_HEADER, f"genus {genus}"]
    for cell, position in disk.steps:
        s, k = cell.split
        lines.append(f"cell {cell.cell_type} split {s} {k} position {position}")
        lines += [f"boundary {format_vertex(p)}" for p in cell.boundary]
    lines += [f"leaf {kind} {position}" for kind, position in disk.terminal_tree_phase]
    return "\n".join(lines) + "\n"


def read_disk(text):
    genus, lines = _header(text, DISK_HEADER)
    steps, leaves = [], []
    i = 0
    while i < len(lines):
        n, line = lines[i]
        words = line.split()
        if words[0] == "cell":
            if len(words) != 7 or words[2] != "split" or words[5] != "position":
                _fail(n, "cell", "expected 'cell TYPE split S K position P'")
            ctype = words[1]
            if ctype not in CELL_SIZES:
                _fail(n, "cell", f"unknown cell type {ctype!r}")
            s, k, pos = (_int(n, f, w) for f, w in zip(("split", "split", "position"), words[3:5] + words[6:]))
            size = CELL_SIZES[ctype]
            boundary = []
            for n2, line2 in lines[i + 1 : i + 1 + size]:
                boundary.append(_vertex(n2, "boundary", genus, _keyword(n2, line2, "boundary")))
            if len(boundary) != size:
                _fail(n, "boundary", f"{ctype} cell needs {size} boundary lines")
            steps.append((TwoCellCertificate(ctype, tuple(boundary), (s, k)), pos))
            i += 1 + size
        elif words[0] == "leaf":
            if len(words) != 3 or words[1] not in ("A", "S"):
                _fail(n, "leaf", "expected 'leaf A|S POSITION'")
            leaves.append((words[1], _int(n, "leaf", words[2])))
            i += 1
        else:
            _fail(n, "record", f"unknown record {words[0]!r}")
    return genus, DiskCertificate(tuple(steps), tuple(leaves))


# ------------------------------------------------------------ links


def write_link(link):
    lines = [LINK_HEADER, f"genus {link.genus}", f"k {link.k}"]
    for l, a in zip(link.link_curves, link.dual_curves):
        lines += [f"link {l.serialize()}", f"dual {a.serialize()}"]
    return "\n".join(lines) + "\n"


def read_link(text):
    genus, lines = _header(text, LINK_HEADER)
    if not lines:
        raise FormatError("line 3 field k: missing k line")
    n, line = lines[0]
    k = _int(n, "k", _keyword(n, line, "k"))
    links, duals = [], []
    for n, line in lines[1:]:
        head, _, rest = line.partition(" ")
        if head == "link":
            links.append(_curve(n, "link", genus, rest))
        elif head == "dual":
            duals.append(_curve(n, "dual", genus, rest))
        else:
            _fail(n, "record", f"unknown record {head!r}")
    if len(links) != len(duals):
        _fail(n, "dual", "every link line needs a dual line")
    return SurfaceFramedLink(genus, k, tuple(links), tuple(duals))


# ------------------------------------------------------------ invariants


def write_invariants(inv):
    return f"invariants\nchi {inv.euler}\nsigma {inv.signature}\nH1 {inv.h1_text()}\n"
