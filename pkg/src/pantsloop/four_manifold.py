"""
Walks and loops in the pants complex and the 4-manifolds they determine.

A walk ``P1 ... Pn`` gives a handle decomposition built on ``H(P1) x I``:
the cut system of ``P1`` supplies the 1-handles and every S-edge attaches one
surface-framed 2-handle along its new curve.  A loop is closed up by gluing
the two end handlebodies, which adds only 3- and 4-handles.
"""

from dataclasses import dataclass

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .curves import homology_class
from .pants import PantsError, classify_edge, cut_system, standard_cut_system
from .surface import build_model_surface
from .symplectic import lagrangian_of, maslov, psi


class LoopError(ValueError):
    pass


@dataclass(frozen=True)
class WalkInComplex:
    genus: int
    vertices: tuple
    edges: tuple
    oriented: bool = True

    @property
    def s_count(self):
        return sum(1 for e in self.edges if e.kind == "S")

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class LoopInComplex:
    """Cyclic vertex list ``P1 .. Pn``; the closing edge runs from ``Pn`` back to ``P1``."""

    genus: int
    vertices: tuple
    edges: tuple

    @property
    def s_count(self):
        return sum(1 for e in self.edges if e.kind == "S")

    @property
    def walk(self):
        verts = self.vertices + (self.vertices[0],) if self.edges else self.vertices
        return WalkInComplex(self.genus, verts, self.edges)

    def __len__(self):
        return len(self.edges)

    def reversed(self):
        return make_loop((self.vertices[0],) + tuple(reversed(self.vertices[1:])))

    def rotated(self, k):
        k %= len(self.vertices)
        return make_loop(self.vertices[k:] + self.vertices[:k])


def _collapse(vertices):
    out = []
    for v in vertices:
        if not out or classify_edge(out[-1], v).kind != "Identical":
            out.append(v)
    return out


def _edges(vertices):
    edges = []
    for i in range(len(vertices) - 1):
        e = classify_edge(vertices[i], vertices[i + 1])
        if e.kind not in ("A", "S"):
            raise LoopError(f"not an edge at position {i}")
        edges.append(e)
    return tuple(edges)


def build_walk(vertices):
    """Validated walk; consecutive identical vertices are collapsed."""
    vertices = list(vertices)
    if not vertices:
        raise LoopError("walk needs at least one vertex")
    genus = vertices[0].genus
    if any(v.genus != genus for v in vertices):
        raise LoopError("vertices live on different surfaces")
    verts = _collapse(vertices)
    return WalkInComplex(genus, tuple(verts), _edges(verts))


def make_loop(vertices):
    """Validated loop through the vertices, closing back to the first."""
    walk = build_walk(vertices)
    verts = list(walk.vertices)
    while len(verts) > 1 and classify_edge(verts[-1], verts[0]).kind == "Identical":
        verts.pop()
    if len(verts) == 1:
        return LoopInComplex(walk.genus, tuple(verts), ())
    edges = _edges(verts + [verts[0]])
    return LoopInComplex(walk.genus, tuple(verts), edges)


def edge_three_manifold(edge, genus):
    """k such that the edge's 3-manifold is the connected sum of k copies of S1 x S2."""
    if edge.kind == "A":
        return genus
    if edge.kind == "S":
        return genus - 1
    raise LoopError(f"not an A- or S-edge: {edge.kind}")


@dataclass(frozen=True)
class HandleData:
    genus: int
    one_handle_curves: tuple
    two_handles: tuple  # (attaching curve, framing, depth index)
    closure: bool = False


def handle_decomposition(w):
    """1-handles from the start vertex's cut system, one 2-handle per S-edge."""
    closure = isinstance(w, LoopInComplex)
    walk = w.walk if closure else w
    ones = tuple(cut_system(walk.vertices[0]).components)
    twos = []
    for i, e in enumerate(walk.edges):
        if e.kind == "S":
            twos.append((e.new, "surface", i + 1))
    return HandleData(walk.genus, ones, tuple(twos), closure)


# ------------------------------------------------------------ invariants


def euler_characteristic(loop):
    return loop.s_count + 2 - 2 * loop.genus


def euler_characteristic_oracle(loop):
    """
    Inclusion-exclusion over the pieces of the closed manifold.

    Each edge contributes its wedge (a boundary connected sum of S1 x D3's),
    each vertex a 3-dimensional handlebody, and all pieces meet in the
    central surface.  The constant loop is the double of one wedge-filling.
    """
    g = loop.genus
    surface = build_model_surface(g)
    handlebody = [1 - len(cut_system(p).components) for p in loop.vertices]
    if not loop.edges:
        # double of the boundary sum of g copies of S1 x B3; the glued boundary has chi 0
        return 2 * (1 - len(cut_system(loop.vertices[0]).components))
    wedges = [1 - edge_three_manifold(e, g) for e in loop.edges]
    return sum(wedges) - sum(handlebody) + surface.euler_characteristic()


def signature(loop):
    """Sum of Maslov indices of the vertex Lagrangians against the first one."""
    lags = [lagrangian_of(p) for p in loop.vertices]
    n = len(lags)
    total = 0
    for i in range(1, n - 1):
        total += maslov(lags[0], lags[i], lags[i + 1])
    return -total


def two_handle_matrix(loop):
    """Integer g x s matrix of 2-handle classes in H_1 of the start handlebody."""
    data = handle_decomposition(loop)
    duals = [homology_class(c) for c in data.one_handle_curves]
    return [[psi(homology_class(h), d) for h, _, _ in data.two_handles] for d in duals]


def invariant_factors(matrix, rows):
    """Invariant factors of the cokernel, dropping units; 0 marks a free summand."""
    if not matrix or not matrix[0]:
        return [0] * rows
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    diag += [0] * (rows - len(diag))
    return sorted(d for d in diag if d != 1)


def first_homology(loop):
    m = two_handle_matrix(loop)
    return invariant_factors(m, loop.genus)


@dataclass(frozen=True)
class FourManifoldInvariants:
    euler: int
    signature: int
    h1_invariant_factors: tuple

    def h1_text(self):
        return format_h1(self.h1_invariant_factors)

    def summary(self):
        return f"chi={self.euler} sigma={self.signature} H1={self.h1_text()}"


def format_h1(factors):
    free = sum(1 for d in factors if d == 0)
    parts = [f"Z/{d}" for d in sorted(d for d in factors if d)]
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    return "+".join(parts) if parts else "0"


def invariants(loop):
    chi = euler_characteristic(loop)
    oracle = euler_characteristic_oracle(loop)
    if chi != oracle:
        raise RuntimeError(f"Euler characteristic formula {chi} disagrees with decomposition count {oracle}")
    return FourManifoldInvariants(chi, signature(loop), tuple(first_homology(loop)))


# ------------------------------------------------------------ Kirby export


def export_kirby(w):
    """Line-oriented Kirby data: dotted circles for the cut system, surface-framed 2-handles."""
    closure = isinstance(w, LoopInComplex)
    walk = w.walk if closure else w
    g = walk.genus
    start = walk.vertices[0]
    standard = standard_cut_system(g)
    if not all(c in start.curves for c in standard):
        raise PantsError("standardize start vertex first")
    lines = ["kirby", f"genus {g}"]
    for i, c in enumerate(standard, 1):
        lines.append(f"dotted {i} {c.serialize()}")
    data = handle_decomposition(walk)
    for i, (curve, framing, depth) in enumerate(data.two_handles, 1):
        lines.append(f"handle {i} framing={framing} depth={depth} {curve.serialize()}")
    lines.append(f"closure {'yes' if closure else 'no'}")
    return "\n".join(lines) + "\n"
