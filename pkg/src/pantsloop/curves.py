"""
Simple closed curves and multicurves on the model surface.

A curve is a cyclic sequence of normal arcs ``(triangle, corner)``; the arc
``(t, c)`` cuts off corner ``c`` of triangle ``t``.  Isotopy classes are
identified through closed geodesics (see :mod:`pantsloop.geometry`): the
geodesic representative is in minimal position with every edge of the
triangulation, so the normal arcs it traces form a canonical representative.
"""

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import geometry
from .surface import build_model_surface, partner, side_edge


class CurveError(ValueError):
    pass


def _rotations(seq):
    return [seq[i:] + seq[:i] for i in range(len(seq))]


def _min_rotation(seq):
    return min(_rotations(tuple(seq)))


@dataclass(frozen=True)
class Curve:
    """
    One oriented component, as a cyclic tuple of normal arcs.

    The arcs fix the orientation unless the cycle reads the same both ways
    round; then ``flip`` picks the second traversal.
    """

    genus: int
    arcs: tuple
    flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        if not self.arcs:
            raise CurveError("empty curve")

    @property
    def surface(self):
        return build_model_surface(self.genus)

    @cached_property
    def exits(self):
        """Polygon sides crossed, in order, as exits from the fundamental polygon."""
        return _arcs_to_exits(self.surface, self.arcs, self.flip)

    def reversed(self):
        exits = tuple(partner(k) for k in reversed(self.exits))
        return _from_exits(self.genus, exits)

    def weights(self):
        return _weights(self.surface, [self])

    def serialize(self):
        text = " ".join(f"({t},{c})" for t, c in self.arcs)
        return text + " ~" if self.flip else text

    def __repr__(self):
        return f"Curve(g={self.genus}, {self.serialize()})"


@dataclass(frozen=True)
class MultiCurve:
    genus: int
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        for c in self.components:
            if c.genus != self.genus:
                raise CurveError("components live on different surfaces")

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    @property
    def weights(self):
        return _weights(build_model_surface(self.genus), self.components)

    def is_reduced(self):
        canon = [canonical_curve(c) for c in self.components]
        return len(set(canon)) == len(canon)

    def serialize(self):
        return "\n".join(c.serialize() for c in self.components)


# ------------------------------------------------------------ conversions


def _corner(s_in, s_out):
    if (s_in - s_out) % 3 == 1:
        return s_in
    if (s_out - s_in) % 3 == 1:
        return s_out
    raise CurveError("arc must join two different slots")


def _arc_slots(arc):
    t, c = arc
    return ((c - 1) % 3, c)


def _arcs_to_exits(surface, arcs, flip=False):
    ntri = surface.num_triangles
    for t, c in arcs:
        if not (0 <= t < ntri and 0 <= c < 3):
            raise CurveError(f"arc ({t},{c}) out of range")
    n = len(arcs)
    found = []
    for first in _arc_slots(arcs[0]):
        exits = []
        exit_slot = first
        ok = True
        for i in range(n):
            t, _ = arcs[i]
            nxt = arcs[(i + 1) % n]
            u, r = surface.gluing[(t, exit_slot)]
            if u != nxt[0] or r not in _arc_slots(nxt):
                ok = False
                break
            side = surface.slot_side(t, exit_slot)
            if side is not None:
                exits.append(side)
            a, b = _arc_slots(nxt)
            exit_slot = b if r == a else a
        if ok and exit_slot == first:
            found.append(tuple(exits))
    if not found:
        raise CurveError("arcs do not close up into a curve")
    if flip and len(found) < 2:
        raise CurveError("orientation marker on a curve whose arcs already fix it")
    return found[1] if flip else found[0]


def _cyclic_equal(a, b):
    return len(a) == len(b) and any(a[i:] + a[:i] == b for i in range(len(a)))


def _from_exits(genus, exits):
    """Curve through the given side exits, keeping their direction."""
    surface = build_model_surface(genus)
    arcs = _min_rotation(_exits_to_arcs(surface, exits))
    c = Curve(genus, arcs)
    if _cyclic_equal(c.exits, tuple(exits)):
        return c
    return Curve(genus, arcs, True)


def _triangle_of_side(surface, side):
    return surface.side_slot[side]


def _exits_to_arcs(surface, exits):
    arcs = []
    n = len(exits)
    for i in range(n):
        entry_side = partner(exits[i - 1])
        exit_side = exits[i]
        t0, s0 = _triangle_of_side(surface, entry_side)
        t1, s1 = _triangle_of_side(surface, exit_side)
        t, s_in = t0, s0
        while t != t1:
            if t < t1:
                arcs.append((t, _corner(s_in, 2)))
                t, s_in = t + 1, 0
            else:
                arcs.append((t, _corner(s_in, 0)))
                t, s_in = t - 1, 2
        arcs.append((t, _corner(s_in, s1)))
    return tuple(arcs)


def _weights(surface, curves):
    w = [0] * surface.num_edges
    for c in curves:
        for t, corner in c.arcs:
            for s in _arc_slots((t, corner)):
                w[surface.triangles[t][s][0]] += 1
    return tuple(x // 2 for x in w)


def _realize(surface, curves):
    """
    Components of the embedded normal multicurve with the same arc counts.

    Raises CurveError if the arc counts are not those of a normal multicurve.
    """
    count = Counter()
    for c in curves:
        count.update(c.arcs)
    ntri = surface.num_triangles

    def n(t, c):
        return count[(t, c % 3)]

    def width(t, s):
        return n(t, s) + n(t, s + 1)

    for (t, s), (u, r) in surface.gluing.items():
        if width(t, s) != width(u, r):
            raise CurveError("not a multicurve: arc counts do not match across an edge")

    seen = set()
    components = []
    for t in range(ntri):
        for s in range(3):
            for p in range(width(t, s)):
                if (t, s, p) in seen:
                    continue
                comp = []
                cur = (t, s, p)
                while cur not in seen:
                    seen.add(cur)
                    ct, cs, cp = cur
                    if cp < n(ct, cs):
                        corner, j = cs, cp
                        other = ((cs - 1) % 3, width(ct, cs - 1) - 1 - j)
                    else:
                        corner, j = (cs + 1) % 3, width(ct, cs) - 1 - cp
                        other = ((cs + 1) % 3, j)
                    comp.append((ct, corner))
                    seen.add((ct,) + other)
                    u, r = surface.gluing[(ct, other[0])]
                    cur = (u, r, width(ct, other[0]) - 1 - other[1])
                components.append(tuple(comp))
    return components


def _cyclic_key(arcs):
    return min(_min_rotation(arcs), _min_rotation(tuple(reversed(arcs))))


def check_embedded(genus, curves):
    """Raise CurveError unless the curves form an embedded normal multicurve."""
    surface = build_model_surface(genus)
    realized = Counter(_cyclic_key(c) for c in _realize(surface, curves))
    given = Counter(_cyclic_key(c.arcs) for c in curves)
    if realized != given:
        raise CurveError("not a multicurve: components cross or are not embedded")


# ------------------------------------------------------------ geodesics


def geodesic(curve):
    """Traced closed geodesic of a curve component (oriented like the curve)."""
    try:
        return geometry.trace(curve.genus, curve.exits)
    except geometry.TrivialCurve:
        raise CurveError("inessential component: curve bounds a disk") from None


@lru_cache(maxsize=8192)
def _canonical_oriented(curve):
    tr = geodesic(curve)
    if tr.primitive_power != 1:
        raise CurveError("not a multicurve: component wraps a geodesic more than once")
    return _from_exits(curve.genus, tr.exits)


def canonical_curve(curve, oriented=False):
    """Canonical representative of one component."""
    c = _canonical_oriented(curve)
    if oriented:
        return c
    r = _canonical_oriented(c.reversed())
    return c if (c.arcs, c.flip) <= (r.arcs, r.flip) else r


def canonical_form(m, oriented=False):
    """
    Canonical representative of a multicurve's isotopy class.

    Two multicurves are isotopic iff their canonical forms are equal.  Unless
    ``oriented`` is set, component orientations are normalised away.
    """
    if isinstance(m, Curve):
        m = MultiCurve(m.genus, (m,))
    check_embedded(m.genus, m.components)
    comps = [canonical_curve(c, oriented) for c in m.components]
    if oriented:
        return MultiCurve(m.genus, tuple(comps))
    return MultiCurve(m.genus, tuple(sorted(comps, key=lambda c: c.arcs)))


def curve_from_sides(genus, sides):
    """
    The simple closed curve freely homotopic to a side-crossing path.

    ``sides`` lists the polygon sides crossed when leaving the fundamental
    polygon.  Raises CurveError if the path is trivial or not homotopic to a
    simple closed curve.
    """
    surface = build_model_surface(genus)
    try:
        tr = geometry.trace(genus, tuple(sides))
    except geometry.TrivialCurve:
        raise CurveError("inessential component: curve bounds a disk") from None
    if tr.primitive_power != 1:
        raise CurveError("path is a proper power; not a simple curve")
    count, _ = geometry.crossings(tr, tr, surface.num_sides, same=True)
    if count:
        raise CurveError("path is not homotopic to a simple closed curve")
    return _from_exits(genus, tr.exits)


def torus_curve(p, q):
    """The (p, q) curve on the model torus, oriented along (p, q)."""
    from math import gcd

    if gcd(p, q) != 1:
        raise CurveError("(p, q) must be coprime")
    sides = [1 if p > 0 else 3] * abs(p) + [2 if q > 0 else 0] * abs(q)
    return curve_from_sides(1, sides)


def is_simple(curve):
    tr = geodesic(curve)
    n = 4 * curve.genus
    return tr.primitive_power == 1 and geometry.crossings(tr, tr, n, same=True)[0] == 0


# ------------------------------------------------------------ intersections


def _components(m):
    if isinstance(m, Curve):
        return (m,)
    return m.components


def geometric_intersection(c1, c2):
    """Minimal number of crossings between the isotopy classes."""
    total = 0
    for a in _components(c1):
        for b in _components(c2):
            n = 4 * a.genus
            total += geometry.crossings(geodesic(a), geodesic(b), n)[0]
    return total


def algebraic_intersection(c1, c2):
    """Signed crossing count; positive when (tangent c1, tangent c2) is positively oriented."""
    total = 0
    for a in _components(c1):
        for b in _components(c2):
            n = 4 * a.genus
            total += geometry.crossings(geodesic(a), geodesic(b), n)[1]
    return total


def isotopic(c1, c2):
    return canonical_form(c1) == canonical_form(c2)


# orientation sign of psi(a_i, b_i) for the side loops under the crossing convention
_EPSILON = 1


def homology_class(c, basis=None):
    """Coordinates of an oriented (multi)curve in the basis a_1..a_g, b_1..b_g."""
    comps = _components(c)
    g = comps[0].genus
    if basis is not None and basis.genus != g:
        raise CurveError("basis lives on a different surface")
    with_a = [0] * g  # psi(c, a_i)
    with_b = [0] * g  # psi(c, b_i)
    for comp in comps:
        for k in comp.exits:
            e, forward = side_edge(k)
            sign = 1 if forward else -1
            if e % 2 == 0:
                with_a[e // 2] += sign
            else:
                with_b[e // 2] += sign
    return tuple([x * _EPSILON for x in with_b] + [-x * _EPSILON for x in with_a])


# ------------------------------------------------------------ cutting


class _Cut:
    """Σ cut along a multicurve of pairwise disjoint, pairwise distinct geodesics."""

    def __init__(self, genus, traces):
        self.genus = genus
        n = self.n = 4 * genus
        marks = []  # (param, kind, data)
        for gi, tr in enumerate(traces):
            for ci, ch in enumerate(tr.chords):
                marks.append((ch.entry, "E", (gi, ci)))
                marks.append((ch.exit, "X", (gi, ci)))
        for k in range(n):
            marks.append((k, "V", k))
        marks.sort(key=lambda m: m[0])
        self.marks = marks
        index = {}
        for i, (_, kind, data) in enumerate(marks):
            if kind != "V":
                index[(kind, data)] = i
        m = len(marks)

        # region tracing: pieces are indexed by their starting mark
        region_of_piece = [None] * m
        regions = []
        for start in range(m):
            if region_of_piece[start] is not None:
                continue
            rid = len(regions)
            info = {"pieces": [], "vertex": False, "sides": []}
            p = start
            while region_of_piece[p] is None:
                region_of_piece[p] = rid
                info["pieces"].append(p)
                end = (p + 1) % m
                _, kind, data = marks[end]
                if kind == "V":
                    info["vertex"] = True
                    p = end
                    continue
                gi, ci = data
                if kind == "E":
                    info["sides"].append((gi, "L"))
                    p = index[("X", data)]
                else:
                    info["sides"].append((gi, "R"))
                    p = index[("E", data)]
            regions.append(info)
        self.regions = regions
        self.region_of_piece = region_of_piece

        parent = list(range(len(regions)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        # pieces per side, ordered along the side
        by_side = {k: [] for k in range(n)}
        for i, (param, kind, _) in enumerate(marks):
            side = int(param) if kind != "V" else param
            by_side[side % n].append(i)
        self.piece_pairs = 0
        for k in range(n):
            kp = partner(k)
            if k > kp:
                continue
            a, b = by_side[k], by_side[kp]
            if len(a) != len(b):
                raise RuntimeError("side crossings do not pair up")
            for j, piece in enumerate(a):
                other = b[len(b) - 1 - j]
                ra, rb = find(region_of_piece[piece]), find(region_of_piece[other])
                parent[ra] = rb
                self.piece_pairs += 1
        vert = [r for r, info in enumerate(regions) if info["vertex"]]
        for r in vert[1:]:
            parent[find(r)] = find(vert[0])
        self.find = find
        comps = {}
        for r in range(len(regions)):
            comps.setdefault(find(r), []).append(r)
        self.components = comps

    def component_of_param(self, x):
        """Component containing the boundary point with parameter ``x``."""
        params = [m[0] for m in self.marks]
        # piece starting at the last mark before x (cyclically)
        idx = -1
        for i, p in enumerate(params):
            if p < x:
                idx = i
        return self.find(self.region_of_piece[idx % len(params)])

    def topology(self, ntraces):
        result = {}
        for root, regs in self.components.items():
            pieces = sum(len(self.regions[r]["pieces"]) for r in regs)
            vertex_pieces = sum(1 for r in regs for p in self.regions[r]["pieces"] if self.marks[p][1] == "V")
            side_pieces = pieces - 0 * vertex_pieces
            has_vertex = any(self.regions[r]["vertex"] for r in regs)
            boundary = set()
            for r in regs:
                boundary.update(self.regions[r]["sides"])
            chi = len(regs) - side_pieces // 2 + (1 if has_vertex else 0)
            b = len(boundary)
            genus2 = 2 - chi - b
            if genus2 % 2 or genus2 < 0:
                raise RuntimeError("inconsistent cut surface")
            result[root] = (genus2 // 2, b)
        return result


def _distinct_traces(m):
    comps = [canonical_curve(c) for c in _components(m)]
    groups = Counter(comps)
    return list(groups), groups


def complementary_components(m):
    """(genus, boundary count) of each piece of Σ cut along the multicurve."""
    comps = _components(m) if not isinstance(m, int) else ()
    genus = comps[0].genus if comps else None
    if isinstance(m, MultiCurve):
        genus = m.genus
        check_embedded(genus, m.components)
    distinct, groups = _distinct_traces(m) if comps else ([], Counter())
    traces = [geodesic(c) for c in distinct]
    cut = _Cut(genus, traces)
    pieces = list(cut.topology(len(traces)).values())
    for c, k in groups.items():
        pieces.extend([(0, 2)] * (k - 1))
    return sorted(pieces)


def support_component(cut_curves, marker, genus):
    """Topological type of the piece of Σ cut along ``cut_curves`` that contains ``marker``."""
    distinct = list(dict.fromkeys(canonical_curve(c) for c in cut_curves))
    traces = [geodesic(c) for c in distinct]
    cut = _Cut(genus, traces)
    topo = cut.topology(len(traces))
    entry = geodesic(marker).chords[0].entry
    return topo[cut.component_of_param(entry)]


# ------------------------------------------------------------ parsing


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_curve(genus, text):
    """Parse ``(t,c) (t,c) ...`` (optionally ending in ``~``) into a Curve."""
    pairs = _PAIR.findall(text)
    rest = _PAIR.sub("", text).strip()
    flip = rest == "~"
    if (rest and not flip) or not pairs:
        raise CurveError(f"cannot parse curve: {text!r}")
    arcs = tuple((int(a), int(b)) for a, b in pairs)
    _arcs_to_exits(build_model_surface(genus), arcs, flip)
    return Curve(genus, arcs, flip)
