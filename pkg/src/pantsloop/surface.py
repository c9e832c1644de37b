"""
Combinatorial model of the closed oriented genus-g surface.

The surface is the standard 4g-gon with side word
``a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1``, triangulated by the fan of
diagonals from polygon vertex ``v0``.  After identification there is a single
vertex, ``6g - 3`` edges and ``4g - 2`` triangles.

Conventions used throughout the package:

* Polygon vertices ``v0 .. v(4g-1)`` run counter-clockwise; side ``k`` joins
  ``v_k`` to ``v_(k+1)``.  Sides ``k`` and ``partner(k)`` are glued with
  reversed orientation (``4i <-> 4i+2``, ``4i+1 <-> 4i+3``).
* Triangle ``j`` has vertices ``(v0, v_(j+1), v_(j+2))``; slot ``s`` is the
  triangle edge from triangle-vertex ``s`` to ``s+1``.
* Corner ``c`` of a triangle sits at triangle-vertex ``c``; a normal arc of
  type ``(t, c)`` joins slot ``c-1`` to slot ``c``.
* Edge ids: side pair ``{4i, 4i+2}`` is edge ``2i`` (the a_i loop), side pair
  ``{4i+1, 4i+3}`` is edge ``2i+1`` (the b_i loop), diagonal ``v0 v_(m+2)``
  is edge ``2g + m``.  An edge is directed like its lower-numbered side, and
  diagonals point away from ``v0``.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def partner(side):
    """Index of the polygon side glued to ``side``."""
    return side + 2 if side % 4 in (0, 1) else side - 2


def side_edge(side):
    """Edge id of a polygon side, and whether the side's ccw direction agrees."""
    block, r = divmod(side, 4)
    return 2 * block + (r % 2), r in (0, 1)


@dataclass(frozen=True)
class ModelSurface:
    genus: int
    # triangles[t][s] = (edge id, slot direction agrees with edge direction)
    triangles: tuple
    # gluing[(t, s)] = (t', s'); fixed-point free involution
    gluing: dict
    # side_slot[k] = (t, s) holding polygon side k
    side_slot: tuple

    @property
    def num_sides(self):
        return 4 * self.genus

    @property
    def num_edges(self):
        return 6 * self.genus - 3

    @property
    def num_triangles(self):
        return 4 * self.genus - 2

    def slot_side(self, t, s):
        """Polygon side occupying slot ``s`` of triangle ``t``, or None for a diagonal."""
        return _slot_side_table(self)[(t, s)]

    def num_vertices(self):
        """Vertex classes of the glued complex, computed from corner identifications."""
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for (t, s), (u, r) in self.gluing.items():
            # slot s of t runs vertex s -> s+1; slot r of u runs r -> r+1 reversed
            union((t, s), (u, (r + 1) % 3))
            union((t, (s + 1) % 3), (u, r))
        for t in range(self.num_triangles):
            for c in range(3):
                find((t, c))
        return len({find(x) for x in parent})

    def euler_characteristic(self):
        return self.num_vertices() - self.num_edges + self.num_triangles

    def validate(self):
        """Check the closed orientable surface conditions; raises ValueError."""
        slots = [(t, s) for t in range(self.num_triangles) for s in range(3)]
        if sorted(self.gluing) != sorted(slots):
            raise ValueError("gluing must cover every triangle slot")
        for a, b in self.gluing.items():
            if a == b:
                raise ValueError(f"slot {a} glued to itself")
            if self.gluing[b] != a:
                raise ValueError(f"gluing is not an involution at {a}")
            ea, fa = self.triangles[a[0]][a[1]]
            eb, fb = self.triangles[b[0]][b[1]]
            if ea != eb:
                raise ValueError(f"slots {a} and {b} carry different edges")
            # both triangles are ccw, so a glued edge must be traversed oppositely
            if fa == fb:
                raise ValueError(f"orientations disagree across {a} ~ {b}")
        if self.euler_characteristic() != 2 - 2 * self.genus:
            raise ValueError("Euler characteristic does not match genus")
        return self


@lru_cache(maxsize=None)
def _slot_side_table(surface):
    table = {(t, s): None for t in range(surface.num_triangles) for s in range(3)}
    for k, ts in enumerate(surface.side_slot):
        table[ts] = k
    return table


def _model_hash(self):
    return hash((self.genus, self.triangles))


ModelSurface.__hash__ = _model_hash


@lru_cache(maxsize=None)
def build_model_surface(genus):
    """The canonical fan-triangulated 4g-gon surface of the given genus."""
    if not isinstance(genus, (int, np.integer)) or genus < 1:
        raise ValueError("genus must be >= 1")
    genus = int(genus)
    n = 4 * genus
    ntri = n - 2

    def diag(m):
        return 2 * genus + m

    triangles = []
    side_slot = [None] * n
    for j in range(ntri):
        if j == 0:
            s0 = side_edge(0)
            side_slot[0] = (j, 0)
        else:
            s0 = (diag(j - 1), True)
        s1 = side_edge(j + 1)
        side_slot[j + 1] = (j, 1)
        if j == ntri - 1:
            s2 = side_edge(n - 1)
            side_slot[n - 1] = (j, 2)
        else:
            s2 = (diag(j), False)
        triangles.append((s0, s1, s2))

    gluing = {}
    for k in range(n):
        gluing[side_slot[k]] = side_slot[partner(k)]
    for m in range(ntri - 1):
        gluing[(m, 2)] = (m + 1, 0)
        gluing[(m + 1, 0)] = (m, 2)
    return ModelSurface(genus, tuple(triangles), gluing, tuple(side_slot)).validate()


@dataclass(frozen=True)
class HomologyBasis:
    """Symplectic basis a_1..a_g, b_1..b_g of H_1 in edge-chain coordinates."""

    genus: int
    classes: tuple
    pairing: np.ndarray

    def __hash__(self):
        return hash((self.genus, self.classes))

    def __eq__(self, other):
        return isinstance(other, HomologyBasis) and self.genus == other.genus and self.classes == other.classes

    def psi(self, x, y):
        """Intersection form on coordinate vectors (length 2g)."""
        return int(np.asarray(x, dtype=object) @ self.pairing.astype(object) @ np.asarray(y, dtype=object))


def symplectic_pairing(genus):
    J = np.zeros((2 * genus, 2 * genus), dtype=np.int64)
    J[:genus, genus:] = np.eye(genus, dtype=np.int64)
    J[genus:, :genus] = -np.eye(genus, dtype=np.int64)
    return J


@lru_cache(maxsize=None)
def standard_homology_basis(surface):
    g = surface.genus
    classes = []
    for i in range(g):
        v = [0] * surface.num_edges
        v[2 * i] = 1
        classes.append(tuple(v))
    for i in range(g):
        v = [0] * surface.num_edges
        v[2 * i + 1] = 1
        classes.append(tuple(v))
    return HomologyBasis(g, tuple(classes), symplectic_pairing(g))
