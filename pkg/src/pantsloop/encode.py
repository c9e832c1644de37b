"""
Loops in the pants complex realising a given handle decomposition.

Input is a surface-framed link: curves ``l_i`` on the model surface, each
with a dual curve ``alpha_i`` meeting it once, together with the number
``k`` of 1-handles.  The loop is assembled in four walks:

1. ``g - k`` S-moves cancelling standard 1-handles (reaching Q),
2. A-moves inside the handlebody of Q to a decomposition R containing the
   dual curves and the boundaries of their neighbourhoods with the link,
3. one S-move ``alpha_i -> l_i`` per link component (the 2-handles),
4. a closing walk back to the start, found by bounded search.
"""

from dataclasses import dataclass
from itertools import combinations

from . import geometry
from .curves import CurveError, canonical_curve, curve_from_sides, geometric_intersection, homology_class
from .four_manifold import invariant_factors, invariants, make_loop
from .pants import (
    PATH_DEPTH,
    WEIGHT_BOUND,
    NotFound,
    PantsError,
    a_path,
    bounds_disk,
    classify_edge,
    complete_to_pants,
    curve_pool,
    dual_cut_system,
    neighbors,
    standard_cut_system,
    standard_decomposition,
    support_component,
)
from .surface import partner
from .symplectic import lagrangian_of, psi, rank

CLOSING_TRIES = 200
POOL_LENGTHS = (3, 4)


class EncodingError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceFramedLink:
    genus: int
    k: int
    link_curves: tuple
    dual_curves: tuple

    def validate(self):
        g = self.genus
        if not 0 <= self.k <= g:
            raise EncodingError("k must lie between 0 and the genus")
        if len(self.link_curves) != len(self.dual_curves):
            raise EncodingError("every link curve needs exactly one dual curve")
        ls = [canonical_curve(c) for c in self.link_curves]
        alphas = [canonical_curve(c) for c in self.dual_curves]
        for i, (a, l) in enumerate(zip(alphas, ls)):
            if geometric_intersection(a, l) != 1:
                raise EncodingError("dual curve must meet its link curve once")
            for j, other in enumerate(ls):
                if i != j and geometric_intersection(a, other):
                    raise EncodingError("dual curve must miss the other link curves")
        for x, y in combinations(alphas, 2):
            if geometric_intersection(x, y):
                raise EncodingError("dual curves must be pairwise disjoint")
        for x, y in combinations(ls, 2):
            if geometric_intersection(x, y) or x == y:
                raise EncodingError("link curves must be pairwise disjoint")
        return SurfaceFramedLink(g, self.k, tuple(ls), tuple(alphas))


def _q_walk(genus, k):
    """Start vertex and the S-moves cancelling the last g - k standard 1-handles."""
    start = standard_decomposition(genus)
    walk = [start]
    for c, d in list(zip(standard_cut_system(genus), dual_cut_system(genus)))[k:]:
        nxt = walk[-1].replace(c, d)
        if classify_edge(walk[-1], nxt).kind != "S":
            raise EncodingError("standard handle cancellation is not an S-move")
        walk.append(nxt)
    return walk


def _inverse_word(word):
    return tuple(partner(s) for s in reversed(word))


def neighbourhood_boundary(alpha, link):
    """The separating curve bounding a regular neighbourhood of alpha and link."""
    g = alpha.genus
    if g == 1:
        return None
    A, B = alpha.exits, link.exits
    for i in range(len(A)):
        for j in range(len(B)):
            for b in (B[j:] + B[:j], _inverse_word(B[j:] + B[:j])):
                a = A[i:] + A[:i]
                word = a + b + _inverse_word(a) + _inverse_word(b)
                try:
                    c = canonical_curve(curve_from_sides(g, word))
                except (CurveError, geometry.DegenerateGeodesic):
                    continue
                if any(homology_class(c)):
                    continue
                if geometric_intersection(c, alpha) or geometric_intersection(c, link):
                    continue
                if support_component([c], alpha, g) == (1, 1):
                    return c
    raise EncodingError("could not find the boundary of the dual pair neighbourhood")


def _closing_paths(start, target, candidates, depth):
    """Simple walks of A/S-moves from start to target, shortest first."""
    for limit in range(1, depth + 1):
        stack = [(start, [start])]
        while stack:
            p, path = stack.pop()
            if len(path) - 1 == limit:
                if p == target:
                    yield path
                continue
            for q in reversed(neighbors(p, candidates, ("A", "S"))):
                if q not in path:
                    stack.append((q, path + [q]))


def _complete(partial, q, weight_bound, pool, known):
    """Completion to R; without an explicit pool, retry with longer side words."""
    if pool is not None:
        return complete_to_pants(partial, q, weight_bound, pool=pool, known_disks=known)
    for length in POOL_LENGTHS:
        try:
            return complete_to_pants(partial, q, weight_bound, pool=curve_pool(q.genus, length), known_disks=known)
        except PantsError as exc:
            if "completion not found" not in str(exc) or length == POOL_LENGTHS[-1]:
                raise


def build_stages(link, closing_depth=PATH_DEPTH, pool=None, weight_bound=WEIGHT_BOUND):
    """The four walks W1..W4 as vertex lists (consecutive walks share endpoints)."""
    link = link.validate()
    g = link.genus
    w1 = _q_walk(g, link.k)
    q = w1[-1]
    for a in link.dual_curves:
        if not bounds_disk(a, q):
            raise EncodingError("dual curve must bound a disk in the Q handlebody")
    boundaries = [neighbourhood_boundary(a, l) for a, l in zip(link.dual_curves, link.link_curves)]
    partial = list(link.dual_curves) + [b for b in dict.fromkeys(boundaries) if b is not None]
    if partial:
        # a neighbourhood boundary is the band sum of two copies of alpha's disk
        known = [b for b in boundaries if b is not None]
        r = _complete(partial, q, weight_bound, pool, known)
        path = a_path(q, r, closing_depth, pool=list(r.curves))
        if path is NotFound:
            raise EncodingError("A-path from Q to R not found within depth")
        w2 = [q] + path
    else:
        w2 = [q]
    w3 = [w2[-1]]
    for a, l in zip(link.dual_curves, link.link_curves):
        nxt = w3[-1].replace(a, l)
        if classify_edge(w3[-1], nxt).kind != "S":
            raise EncodingError("dual-to-link move is not an S-move")
        w3.append(nxt)
    start = w1[0]
    end = w3[-1]
    seen = [c for walk in (w1, w2, w3) for p in walk for c in p.curves]
    extra = pool if pool is not None else curve_pool(g, 2)
    candidates = list(dict.fromkeys(list(start.curves) + seen + [canonical_curve(c) for c in extra]))
    if end == start:
        return w1, w2, w3, [end]
    body = w1 + w2[1:] + w3[1:]
    for tries, w4 in enumerate(_closing_paths(end, start, candidates, closing_depth)):
        if tries >= CLOSING_TRIES:
            break
        loop = make_loop(body + w4[1:-1])
        if verify_encoding(link, loop).ok:
            return w1, w2, w3, w4
    raise EncodingError("closing path not found within depth")


def build_loop(link, closing_depth=PATH_DEPTH, pool=None, weight_bound=WEIGHT_BOUND):
    """Loop whose closed 4-manifold has the handle decomposition described by ``link``."""
    w1, w2, w3, w4 = build_stages(link, closing_depth, pool, weight_bound)
    vertices = w1 + w2[1:] + w3[1:] + w4[1:]
    if len(vertices) > 1 and vertices[-1] == vertices[0]:
        vertices = vertices[:-1]
    return make_loop(vertices)


# ------------------------------------------------------------ verification


@dataclass(frozen=True)
class EncodingReport:
    checks: tuple  # (name, expected, actual)

    @property
    def ok(self):
        return all(e == a for _, e, a in self.checks)

    def mismatches(self):
        return [c for c in self.checks if c[1] != c[2]]

    def text(self):
        lines = [f"{name} expected={e} actual={a} {'ok' if e == a else 'MISMATCH'}" for name, e, a in self.checks]
        lines.append("encoding " + ("verified" if self.ok else "failed"))
        return "\n".join(lines) + "\n"


def _end_lagrangian_rows(q, link):
    lq = lagrangian_of(q)
    classes = [homology_class(l) for l in link.link_curves]
    # vectors of L_Q orthogonal to every link class, found by exact elimination
    basis = [list(r) for r in lq.rows]
    for c in classes:
        basis = _orthogonal_part(basis, c)
    return [tuple(v) for v in basis] + [tuple(c) for c in classes]


def _orthogonal_part(vectors, c):
    """Subspace of span(vectors) on which psi(., c) vanishes."""
    vals = [psi(v, c) for v in vectors]
    piv = next((i for i, x in enumerate(vals) if x != 0), None)
    if piv is None:
        return vectors
    out = []
    for i, v in enumerate(vectors):
        if i == piv:
            continue
        f = vals[i] / vals[piv]
        out.append([a - f * b for a, b in zip(v, vectors[piv])])
    return out


def expected_invariants(link):
    """(chi, H1 invariant factors) implied by the handle description of the input."""
    link = link.validate()
    g = link.genus
    w1 = _q_walk(g, link.k)
    start, q = w1[0], w1[-1]
    ls = lagrangian_of(start)
    end_rows = _end_lagrangian_rows(q, link)
    # boundary after the 2-handles is a connected sum of m copies of S1 x S2
    m = 2 * g - rank(list(ls.rows) + end_rows)
    n = len(link.link_curves)
    chi = 2 - link.k + n - m
    cancelled = [d for c, d in list(zip(standard_cut_system(g), dual_cut_system(g)))[link.k:]]
    handles = cancelled + list(link.link_curves)
    duals = [homology_class(c) for c in standard_cut_system(g)]
    matrix = [[psi(homology_class(h), d) for h in handles] for d in duals]
    return chi, tuple(invariant_factors(matrix, g))


def verify_encoding(link, loop):
    """Compare the loop's invariants with those implied by the input."""
    chi, h1 = expected_invariants(link)
    inv = invariants(loop)
    checks = [
        ("start", "standard", "standard" if loop.vertices[0] == standard_decomposition(link.genus) else "other"),
        ("chi", chi, inv.euler),
        ("H1", h1, tuple(inv.h1_invariant_factors)),
    ]
    return EncodingReport(tuple(checks))
