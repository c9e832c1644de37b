"""
Bundled example loops, disk certificates and framed links.

Curves are given by side words on the model polygon (``curve_from_sides``);
on the torus side 1 is the (1,0) direction and side 2 the (0,1) direction,
and at higher genus handle ``i`` uses sides ``4i .. 4i+3``.  Each cell was
found by searching small words and is re-validated whenever it is built.

The genus-2 hexagon lives in the complement of the curve ``e = (6)``.
Its two sides split the pair of loops ``s4-loop`` (short side, two A-edges)
and ``s2xs2-loop`` (long side S A A S); both close up through the same 4S
square hanging off the hexagon vertex ``V4``.
"""

from dataclasses import dataclass
from functools import lru_cache

from .cobordism import DiskCertificate, TwoCellCertificate, apply_replacement, leaf_sequence, validate_cell
from .curves import canonical_curve, curve_from_sides, torus_curve
from .encode import SurfaceFramedLink
from .four_manifold import make_loop
from .pants import pants_from_curves, standard_decomposition


@dataclass(frozen=True)
class Entry:
    kind: str  # "loop", "disk" or "link"
    genus: int
    value: object


def _curve(genus, *sides):
    return canonical_curve(curve_from_sides(genus, sides))


def _pants(genus, *words):
    return pants_from_curves(genus, [_curve(genus, *w) for w in words])


def _cell_disk(cell_type, boundary, k):
    """Disk for a loop that runs once around a single cell: push across it, then prune."""
    cell = validate_cell(TwoCellCertificate(cell_type, tuple(boundary), (0, k)))
    after = apply_replacement(make_loop(boundary), cell, 0)
    return DiskCertificate(((cell, 0),), leaf_sequence(after))


def _disk_then_prune(loop, steps):
    current = loop
    for cell, position in steps:
        current = apply_replacement(current, cell, position)
    return DiskCertificate(tuple(steps), leaf_sequence(current))


# ------------------------------------------------------------ genus 1


def _torus():
    v = [pants_from_curves(1, [torus_curve(p, q)]) for p, q in ((1, 1), (1, 0), (0, 1))]
    loop = make_loop(v)
    rev = loop.reversed()
    out = {
        "cp2-triangle": Entry("loop", 1, loop),
        "cp2-disk": Entry("disk", 1, _cell_disk("3S", loop.vertices, 2)),
        "cp2bar-triangle": Entry("loop", 1, rev),
        "cp2bar-disk": Entry("disk", 1, _cell_disk("3S", rev.vertices, 2)),
        "a-only-g1": Entry("loop", 1, make_loop([standard_decomposition(1)])),
        "a-only-g1-disk": Entry("disk", 1, DiskCertificate((), ())),
        "empty-link-g1": Entry("link", 1, SurfaceFramedLink(1, 0, (), ())),
        "cp2-link": Entry("link", 1, SurfaceFramedLink(1, 0, (torus_curve(0, 1),), (torus_curve(1, 0),))),
    }
    return out


# ------------------------------------------------------------ genus 2


def _genus2():
    g = 2
    c1, c2, sep = (1, 2), (5, 6), (0, 1, 2, 3)
    a1, b1, a2 = (1,), (2,), (5,)
    tri = [_pants(g, c1, sep, c2), _pants(g, a1, sep, c2), _pants(g, b1, sep, c2)]
    square = [_pants(g, c1, sep, c2), _pants(g, a1, sep, c2), _pants(g, a1, sep, a2), _pants(g, c1, sep, a2)]
    a_tri = [_pants(g, (0, 4), (0,), (4,)), _pants(g, (0,), sep, (4,)), _pants(g, (0,), (0, 1, 6, 3), (4,))]
    out = {
        "genus2-3s": Entry("loop", g, make_loop(tri)),
        "genus2-3s-disk": Entry("disk", g, _cell_disk("3S", tri, 2)),
        "genus2-4s": Entry("loop", g, make_loop(square)),
        "genus2-4s-disk": Entry("disk", g, _cell_disk("4S", square, 3)),
        "a-triangle-g2": Entry("loop", g, make_loop(a_tri)),
        "a-triangle-g2-disk": Entry("disk", g, _cell_disk("3A", a_tri, 2)),
    }
    out.update(_hexagon())
    a1, b1, a2, b2 = (curve_from_sides(g, (k,)) for k in (1, 2, 5, 6))
    out["cp2-link-g2"] = Entry("link", g, SurfaceFramedLink(g, 0, (b1,), (a1,)))
    out["cp2-cp2-link-g2"] = Entry("link", g, SurfaceFramedLink(g, 0, (b1, b2), (a1, a2)))
    return out


def _hexagon():
    g = 2
    e = _curve(g, 6)
    x, y, z, t = _curve(g, 1), _curve(g, 0), _curve(g, 0, 4), _curve(g, 1, 4)
    s1 = _curve(g, 0, 1, 2, 3)
    s2 = _curve(g, 3, 2, 6, 1, 4, 0)
    v1, v2, v3, v4, v5, v6 = (
        pants_from_curves(g, [p, q, e]) for p, q in ((x, s1), (y, s1), (y, z), (s2, z), (x, s2), (x, t))
    )
    hexagon = validate_cell(TwoCellCertificate("6AS", (v2, v1, v6, v5, v4, v3), (0, 4)))
    # 4S square at V4: z and e each move inside one of the tori cut off by s2
    z2, e2 = _curve(g, 0, 1, 4), _curve(g, 1, 4, 7)
    w1 = v4.replace(z, z2)
    w2 = w1.replace(e, e2)
    w3 = v4.replace(e, e2)
    square = validate_cell(TwoCellCertificate("4S", (v4, w1, w2, w3), (0, 3)))
    s4 = make_loop([v2, v3, v4, w1, w2, w3, v4, v3])
    s2xs2 = make_loop([v2, v1, v6, v5, v4, w1, w2, w3, v4, v3])
    boundary = make_loop([v1, v2, v3, v4, v5, v6])
    return {
        "6as-hexagon-g2": Entry("loop", g, boundary),
        "6as-hexagon-g2-disk": Entry("disk", g, _cell_disk("6AS", boundary.vertices, 5)),
        "6as-hexagon-cell": Entry("disk", g, DiskCertificate(((hexagon, 0),), ())),
        "s4-loop": Entry("loop", g, s4),
        "s4-disk": Entry("disk", g, _disk_then_prune(s4, [(square, 2)])),
        "s2xs2-loop": Entry("loop", g, s2xs2),
        "s2xs2-disk": Entry("disk", g, _disk_then_prune(s2xs2, [(hexagon, 0), (square, 2)])),
    }


# ------------------------------------------------------------ genus 3
# Two disjointly supported A-moves, a disjoint A- and S-move, and a
# pentagon all need more room than genus 2 offers; they are built at genus 3.


def _genus3():
    g = 3
    std = standard_decomposition(g)
    c0, h0, h1, h2 = _curve(g, 1, 2), _curve(g, 0, 1, 2, 3), _curve(g, 4, 5, 6, 7), _curve(g, 8, 9, 10, 11)
    a0 = _curve(g, 1)
    h1x = _curve(g, 4, 7, 0, 3, 2, 1)
    # A on h1 beside S on c0
    mixed = [std, std.replace(c0, a0), std.replace(c0, a0).replace(h1, h1x), std.replace(h1, h1x)]
    # after h1 -> h1x the handles 0 and 2 hang off disjoint four-holed spheres
    d = std.replace(h1, h1x)
    h0x, h2x = _curve(g, 0, 3, 4, 7), _curve(g, 4, 9, 10, 7)
    square = [d, d.replace(h0, h0x), d.replace(h0, h0x).replace(h2, h2x), d.replace(h2, h2x)]
    # pentagon in the five-holed sphere left by cutting along c0, c1, c2, h2
    p = _curve(g, 1, 2, 7, 4, 5, 6)
    pentagon = [
        std,
        std.replace(h1, h1x),
        std.replace(h1, h1x).replace(h0, h0x),
        std.replace(h0, h0x).replace(h1, p),
        std.replace(h0, p),
    ]
    return {
        "a-square-g2": Entry("loop", g, make_loop(square)),
        "a-square-g2-disk": Entry("disk", g, _cell_disk("4A", square, 3)),
        "4as-square-g2": Entry("loop", g, make_loop(mixed)),
        "4as-square-g2-disk": Entry("disk", g, _cell_disk("4AS", mixed, 3)),
        "a-pentagon-g2": Entry("loop", g, make_loop(pentagon)),
        "a-pentagon-g2-disk": Entry("disk", g, _cell_disk("5A", pentagon, 4)),
    }


@lru_cache(maxsize=None)
def catalog():
    """All bundled entries by name."""
    out = {}
    out.update(_torus())
    out.update(_genus2())
    out.update(_genus3())
    return out


LINKS = ("empty-link-g1", "cp2-link", "cp2-link-g2", "cp2-cp2-link-g2")

LOOP_DISK_PAIRS = (
    ("cp2-triangle", "cp2-disk"),
    ("cp2bar-triangle", "cp2bar-disk"),
    ("a-only-g1", "a-only-g1-disk"),
    ("genus2-3s", "genus2-3s-disk"),
    ("genus2-4s", "genus2-4s-disk"),
    ("a-triangle-g2", "a-triangle-g2-disk"),
    ("6as-hexagon-g2", "6as-hexagon-g2-disk"),
    ("s4-loop", "s4-disk"),
    ("s2xs2-loop", "s2xs2-disk"),
    ("a-square-g2", "a-square-g2-disk"),
    ("4as-square-g2", "4as-square-g2-disk"),
    ("a-pentagon-g2", "a-pentagon-g2-disk"),
)


def entry(name):
    entries = catalog()
    if name not in entries:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(entries))}")
    return entries[name]
