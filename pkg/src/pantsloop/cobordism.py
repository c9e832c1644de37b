"""
2-cells of the pants complex and the cobordism ledger of a null-homotopy.

A disk certificate pushes a loop across 2-cells until it runs along a tree,
then prunes leaves until the loop is constant.  Each step changes the closed
4-manifold by a product cobordism, a blow-up or blow-down, or the trace of a
surgery; the ledger records these steps and ends with a capping-off.
"""

from dataclasses import dataclass, replace

from .four_manifold import invariants, make_loop, signature
from .pants import classify_edge, expected_count, support_component
from .curves import geometric_intersection

CELL_SIZES = {"3A": 3, "3S": 3, "4A": 4, "4S": 4, "4AS": 4, "5A": 5, "6AS": 6}
TRUSTED_TYPES = ("5A", "6AS")
STEP_NAMES = (
    "Product",
    "BlowupPlus",
    "BlowupMinus",
    "BlowdownPlus",
    "BlowdownMinus",
    "Surgery1",
    "Surgery2",
    "CapOff",
)
HEXAGON_PATTERN = "SAASAA"


class CellError(ValueError):
    pass


@dataclass(frozen=True)
class TwoCellCertificate:
    """
    A 2-cell with a chosen split of its boundary.

    ``boundary`` lists the cell's vertices cyclically.  With ``split = (s, k)``
    the removed segment runs forward ``boundary[s] .. boundary[s + k]`` and the
    replacement runs backward from ``boundary[s]`` to the same end vertex.
    """

    cell_type: str
    boundary: tuple
    split: tuple = (0, 1)
    orientation_sign: int = None
    residual_trust: bool = False

    def _walk(self, start, steps, direction):
        n = len(self.boundary)
        return tuple(self.boundary[(start + direction * i) % n] for i in range(steps + 1))

    @property
    def removed(self):
        s, k = self.split
        return self._walk(s, k, 1)

    @property
    def replacement(self):
        s, k = self.split
        return self._walk(s, len(self.boundary) - k, -1)

    def inverse(self):
        """Same cell with removed and replacement segments exchanged."""
        n = len(self.boundary)
        s, k = self.split
        boundary = tuple(self.boundary[(s - i) % n] for i in range(n))
        sign = None if self.orientation_sign is None else -self.orientation_sign
        return replace(self, boundary=boundary, split=(0, n - k), orientation_sign=sign)


@dataclass(frozen=True)
class DiskCertificate:
    steps: tuple  # (TwoCellCertificate, position)
    terminal_tree_phase: tuple  # (edge kind, position)


@dataclass(frozen=True)
class CobordismLedger:
    steps: tuple  # (step name, detail)
    final_class: tuple

    def text(self):
        lines = [f"step {i} {name} {detail}".rstrip() for i, (name, detail) in enumerate(self.steps, 1)]
        m, n = self.final_class
        lines.append(f"class m={m} n={n}")
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------ validation


def _edge_kinds(boundary):
    n = len(boundary)
    kinds = []
    for i in range(n):
        e = classify_edge(boundary[i], boundary[(i + 1) % n])
        if e.kind not in ("A", "S"):
            raise CellError(f"boundary pair {i} is not an edge ({e.kind})")
        kinds.append(e)
    return kinds


def _pattern_matches(kinds, pattern):
    s = "".join(kinds)
    n = len(s)
    variants = [pattern[i:] + pattern[:i] for i in range(n)]
    rev = pattern[::-1]
    variants += [rev[i:] + rev[:i] for i in range(n)]
    return s in variants


def _common(boundary):
    common = set(boundary[0].curves)
    for p in boundary[1:]:
        common &= set(p.curves)
    return sorted(common, key=lambda c: c.arcs)


def validate_cell(c):
    """Run every check for the cell type; return the certificate with its sign filled in."""
    if c.cell_type not in CELL_SIZES:
        raise CellError(f"unknown cell type {c.cell_type}")
    n = CELL_SIZES[c.cell_type]
    if len(c.boundary) != n:
        raise CellError(f"{c.cell_type} cell needs {n} vertices, got {len(c.boundary)}")
    if len(set(c.boundary)) != n:
        raise CellError("boundary vertices must be distinct")
    g = c.boundary[0].genus
    edges = _edge_kinds(c.boundary)
    kinds = [e.kind for e in edges]
    common = _common(c.boundary)
    full = expected_count(g)
    changing = sorted({x for p in c.boundary for x in p.curves} - set(common), key=lambda x: x.arcs)
    t = c.cell_type

    if t in ("3A", "3S"):
        want = "A" if t == "3A" else "S"
        if kinds != [want] * 3:
            raise CellError(f"{t} cell needs three {want}-edges")
        if len(common) != max(full - 1, 0):
            raise CellError("support not a single subsurface")
        if len(changing) != 3:
            raise CellError("triangle must change a single curve")
        hit = 1 if t == "3S" else 2
        for i in range(3):
            for j in range(i + 1, 3):
                if geometric_intersection(changing[i], changing[j]) != hit:
                    raise CellError(f"changing curves must meet {hit} times pairwise")
        support = support_component(common, changing[0], g)
        allowed = [(1, 1)] if t == "3S" else [(0, 4)]
        if g == 1:
            allowed.append((1, 0))
        if support not in allowed:
            raise CellError("support not a single subsurface")
    elif t in ("4A", "4S", "4AS"):
        want = {"4A": "AAAA", "4S": "SSSS", "4AS": "ASAS"}[t]
        if not _pattern_matches(kinds, want):
            raise CellError(f"{t} cell has edge pattern {''.join(kinds)}")
        if len(common) != full - 2 or len(changing) != 4:
            raise CellError("square must change two curves in disjoint supports")
        # opposite edges move the same curve
        moves = [(e.old, e.new) for e in edges]
        first = {moves[0][0], moves[0][1]}
        second = {moves[1][0], moves[1][1]}
        if first & second or {moves[2][0], moves[2][1]} != first or {moves[3][0], moves[3][1]} != second:
            raise CellError("square edges must alternate between two curve moves")
        if any(geometric_intersection(x, y) for x in first for y in second):
            raise CellError("moves are not disjointly supported")
    elif t == "5A":
        if kinds != ["A"] * 5:
            raise CellError("5A cell needs five A-edges")
        if len(common) != full - 2:
            raise CellError("support not a single subsurface")
        if support_component(common, changing[0], g) != (0, 5):
            raise CellError("pentagon support must be a five-holed sphere")
    elif t == "6AS":
        if not _pattern_matches(kinds, HEXAGON_PATTERN):
            raise CellError(f"6AS cell has edge pattern {''.join(kinds)}")
        if len(common) != full - 2:
            raise CellError("support not a single subsurface")
        if support_component(common, changing[0], g) != (1, 2):
            raise CellError("hexagon support must be a twice-holed torus")

    sign = c.orientation_sign
    if t == "3S":
        computed = signature(make_loop(c.boundary))
        if sign is not None and sign != computed:
            raise CellError("orientation sign does not match the triangle")
        sign = computed
    s, k = c.split
    if not 0 < k < n:
        raise CellError("split must be proper")
    return replace(c, orientation_sign=sign, residual_trust=t in TRUSTED_TYPES)


# ------------------------------------------------------------ loop surgery


def _match_at(vertices, segment, position):
    m = len(vertices)
    return all(vertices[(position + i) % m] == v for i, v in enumerate(segment))


def apply_replacement(loop, cell, position):
    """Replace the cell's removed segment, found at ``position`` in the loop."""
    s, k = cell.split
    if not 0 < k < len(cell.boundary):
        raise CellError("split must be proper")
    verts = loop.vertices
    m = len(verts)
    removed = cell.removed
    if k > m or not _match_at(verts, removed, position):
        raise CellError(f"segment mismatch at position {position}")
    w = verts[position:] + verts[:position]
    rep = cell.replacement
    new = list(rep[:-1]) + [w[i % m] for i in range(k, m)]
    return make_loop(new)


def _cycle_signature(cell):
    """Signature of the closed cycle: replacement path, then removed path backwards."""
    rep = cell.replacement
    back = tuple(reversed(cell.removed))
    return signature(make_loop(rep + back[1:-1]))


def _s_count(path):
    return sum(1 for a, b in zip(path, path[1:]) if classify_edge(a, b).kind == "S")


def ledger_effect(cell, loop_orientation=1):
    """Elementary cobordism step for pushing a loop across the cell."""
    delta = _s_count(cell.replacement) - _s_count(cell.removed)
    if cell.cell_type == "3S":
        change = _cycle_signature(cell) * loop_orientation
        if delta == 1:
            return "BlowupPlus" if change > 0 else "BlowupMinus"
        if delta == -1:
            return "BlowdownMinus" if change > 0 else "BlowdownPlus"
        raise CellError("unsupported split shape")
    if delta == 0:
        return "Product"
    if delta == -2:
        return "Surgery1"
    if delta == 2:
        return "Surgery2"
    raise CellError("unsupported split shape")


def remove_leaf(loop, position):
    """Drop an edge that is immediately followed by its reverse."""
    verts = loop.vertices
    m = len(verts)
    if m < 2 or verts[(position + 2) % m] != verts[position % m]:
        raise CellError(f"no back-and-forth edge at position {position}")
    kind = classify_edge(verts[position % m], verts[(position + 1) % m]).kind
    w = verts[position:] + verts[:position]
    new = [w[0]] + list(w[3:])
    step = "Product" if kind == "A" else "Surgery1"
    return make_loop(new), step, kind


def leaf_sequence(loop):
    """Leaf removals that shrink a back-tracking loop to a point, or None if it does not."""
    out = []
    while loop.edges:
        verts = loop.vertices
        m = len(verts)
        pos = next((i for i in range(m) if verts[(i + 2) % m] == verts[i]), None)
        if pos is None:
            return None
        loop, _, kind = remove_leaf(loop, pos)
        out.append((kind, pos))
    return tuple(out)


# ------------------------------------------------------------ reduction


_SHIFT = {
    "Product": (0, 0),
    "BlowupPlus": (1, 1),
    "BlowupMinus": (1, -1),
    "BlowdownPlus": (-1, -1),
    "BlowdownMinus": (-1, 1),
    "Surgery1": (-2, 0),
    "Surgery2": (2, 0),
}


def _check_step(step, before, after):
    """The running loop's invariants must move exactly as the step predicts."""
    dchi = after.euler - before.euler
    dsig = after.signature - before.signature
    if (dchi, dsig) != _SHIFT[step]:
        raise CellError(f"{step} changed (chi, sigma) by ({dchi}, {dsig})")
    if step == "Product" and before.h1_invariant_factors.count(0) != after.h1_invariant_factors.count(0):
        raise CellError("Product changed the free rank of H1")


def reduce(loop, disk, check_steps=True):
    """Run the disk certificate and return the cobordism ledger."""
    current = loop
    steps = []
    inv = invariants(current) if check_steps else None
    for cell, position in disk.steps:
        cell = validate_cell(cell)
        nxt = apply_replacement(current, cell, position)
        step = ledger_effect(cell)
        detail = f"{cell.cell_type} at {position}" + (" (pattern-checked)" if cell.residual_trust else "")
        if check_steps:
            new_inv = invariants(nxt)
            _check_step(step, inv, new_inv)
            inv = new_inv
        steps.append((step, detail))
        current = nxt
    for kind, position in disk.terminal_tree_phase:
        nxt, step, actual = remove_leaf(current, position)
        if actual != kind:
            raise CellError(f"leaf at {position} is an {actual}-edge, certificate says {kind}")
        if check_steps:
            new_inv = invariants(nxt)
            _check_step(step, inv, new_inv)
            inv = new_inv
        steps.append((step, f"{kind}-leaf at {position}"))
        current = nxt
    if current.edges:
        raise CellError("disk certificate does not end at a constant loop")
    steps.append(("CapOff", f"genus {loop.genus}"))
    m = sum(1 for s, _ in steps if s in ("BlowupMinus", "BlowdownPlus"))
    n = sum(1 for s, _ in steps if s in ("BlowupPlus", "BlowdownMinus"))
    sigma = signature(loop)
    if m - n != sigma:
        raise CellError(f"final class ({m}, {n}) inconsistent with signature {sigma}")
    return CobordismLedger(tuple(steps), (m, n))


def signed_3s_count(disk):
    """(signed, total) count of 3S-triangles, signed by their traversal orientation."""
    signed = total = 0
    for cell, _ in disk.steps:
        if cell.cell_type != "3S":
            continue
        total += 1
        signed -= _cycle_signature(cell)
    return signed, total
