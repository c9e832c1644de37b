"""
Pants decompositions, A/S-edges, cut systems and handlebody-set searches.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from .curves import (
    Curve,
    CurveError,
    MultiCurve,
    canonical_curve,
    check_embedded,
    complementary_components,
    curve_from_sides,
    geometric_intersection,
    homology_class,
    support_component,
)
from .surface import partner
from .symplectic import SymplecticError, lagrangian_of

WEIGHT_BOUND = 64
PATH_DEPTH = 8
POOL_WORD_LENGTH = 3


class PantsError(ValueError):
    pass


class _NotFound:
    def __bool__(self):
        return False

    def __repr__(self):
        return "NotFound"


NotFound = _NotFound()


def _key(curve):
    return curve.arcs


@dataclass(frozen=True)
class PantsDecomposition:
    genus: int
    curves: tuple  # canonical unoriented curves, sorted

    @property
    def multicurve(self):
        return MultiCurve(self.genus, self.curves)

    def __len__(self):
        return len(self.curves)

    def __contains__(self, curve):
        return canonical_curve(curve) in self.curves

    def replace(self, old, new):
        curves = [c for c in self.curves if c != old] + [canonical_curve(new)]
        return _decomposition(self.genus, curves)

    def serialize(self):
        return self.multicurve.serialize()


def _decomposition(genus, curves):
    return PantsDecomposition(genus, tuple(sorted(curves, key=_key)))


def expected_count(genus):
    return 1 if genus == 1 else 3 * genus - 3


def validate_pants(m):
    """Check that a multicurve is a pants decomposition and return it."""
    if isinstance(m, PantsDecomposition):
        m = m.multicurve
    g = m.genus
    try:
        for c in m.components:
            check_embedded(g, [c])
        curves = [canonical_curve(c) for c in m.components]
    except CurveError as exc:
        raise PantsError(str(exc)) from None
    n = expected_count(g)
    if len(curves) != n:
        raise PantsError(f"expected {n} curves, got {len(curves)}")
    if len(set(curves)) != len(curves):
        raise PantsError("components must be pairwise non-isotopic")
    for a, b in combinations(curves, 2):
        if geometric_intersection(a, b):
            raise PantsError("components not disjoint")
    if g >= 2:
        pieces = complementary_components(MultiCurve(g, tuple(curves)))
        if pieces != [(0, 3)] * (2 * g - 2):
            raise PantsError(f"complement not all pants: {pieces}")
    return _decomposition(g, curves)


def pants_from_curves(genus, curves):
    return validate_pants(MultiCurve(genus, tuple(curves)))


@dataclass(frozen=True)
class EdgeClassification:
    kind: str  # "A", "S", "Identical" or "NotAnEdge"
    changed_index: int = None
    support: tuple = None
    old: Curve = field(default=None, compare=False)
    new: Curve = field(default=None, compare=False)


def _difference(p1, p2):
    s1, s2 = set(p1.curves), set(p2.curves)
    return sorted(s1 - s2, key=_key), sorted(s2 - s1, key=_key), sorted(s1 & s2, key=_key)


@lru_cache(maxsize=65536)
def classify_edge(p1, p2):
    """Classify the pair as an A-edge, an S-edge, Identical, or NotAnEdge."""
    if p1.genus != p2.genus:
        return EdgeClassification("NotAnEdge")
    only1, only2, common = _difference(p1, p2)
    if not only1 and not only2:
        return EdgeClassification("Identical")
    if len(only1) != 1 or len(only2) != 1:
        return EdgeClassification("NotAnEdge")
    old, new = only1[0], only2[0]
    index = p1.curves.index(old)
    i = geometric_intersection(old, new)
    if i not in (1, 2):
        return EdgeClassification("NotAnEdge")
    support = support_component(common, old, p1.genus)
    if i == 1 and (support == (1, 1) or (p1.genus == 1 and support == (1, 0))):
        return EdgeClassification("S", index, support, old, new)
    if i == 2 and support == (0, 4):
        return EdgeClassification("A", index, support, old, new)
    return EdgeClassification("NotAnEdge")


def _nonseparating(curve):
    return any(homology_class(curve))


def cut_system(p):
    """First g non-separating curves of p (by index) whose complement is connected."""
    g = p.genus
    candidates = [c for c in p.curves if _nonseparating(c)]
    for combo in combinations(candidates, g):
        if complementary_components(MultiCurve(g, combo)) == [(0, 2 * g)]:
            return MultiCurve(g, combo)
    raise RuntimeError("decomposition has no cut system")


# ------------------------------------------------------------ searches


def _reduced_words(genus, length):
    n = 4 * genus
    seen = set()
    for w in product(range(n), repeat=length):
        if any(w[(i + 1) % length] == partner(w[i]) for i in range(length)) and length > 1:
            continue
        inv = tuple(partner(s) for s in reversed(w))
        key = min(min(x[i:] + x[:i] for i in range(length)) for x in (w, inv))
        if key in seen:
            continue
        seen.add(key)
        yield key


@lru_cache(maxsize=None)
def curve_pool(genus, max_length=POOL_WORD_LENGTH):
    """Distinct simple closed curves from cyclic side words up to ``max_length``."""
    found = {}
    for length in range(1, max_length + 1):
        for w in _reduced_words(genus, length):
            try:
                c = canonical_curve(curve_from_sides(genus, w))
            except CurveError:
                continue
            found.setdefault(c, None)
    return tuple(found)


def weight(curve):
    return sum(curve.weights())


def _disjoint_from_all(c, curves):
    return all(c != d and geometric_intersection(c, d) == 0 for d in curves)


def _certified_cut_systems(genus, certified):
    for combo in combinations(certified, genus):
        if not all(_nonseparating(c) for c in combo):
            continue
        if any(geometric_intersection(a, b) for a, b in combinations(combo, 2)):
            continue
        if complementary_components(MultiCurve(genus, combo)) == [(0, 2 * genus)]:
            yield combo


def bounds_disk(curve, reference, certified=()):
    """
    Sound test that ``curve`` bounds a disk in the handlebody of ``reference``.

    A curve disjoint from a cut system of disk-bounding curves lies on the
    boundary of the complementary ball, so it bounds a disk there.  The
    homology condition is checked first as a quick necessary filter.
    """
    c = canonical_curve(curve)
    pool = list(dict.fromkeys(list(reference.curves) + [canonical_curve(x) for x in certified]))
    if c in pool:
        return True
    lag = lagrangian_of(reference)
    if not lag.contains(homology_class(c)):
        return False
    for combo in _certified_cut_systems(reference.genus, pool):
        if _disjoint_from_all(c, combo):
            return True
    return False


def complete_to_pants(partial, reference, weight_bound=WEIGHT_BOUND, pool=None, known_disks=()):
    """
    Extend disk-bounding disjoint curves to a decomposition in the same handlebody set.

    ``known_disks`` are curves the caller already knows to bound disks (for
    instance by construction); they skip certification.
    """
    g = reference.genus
    comps = list(partial.components if isinstance(partial, MultiCurve) else partial)
    curves = [canonical_curve(c) for c in comps]
    if len(set(curves)) != len(curves):
        raise PantsError("non-isotopic required")
    for a, b in combinations(curves, 2):
        if geometric_intersection(a, b):
            raise PantsError("partial curves must be disjoint")
    certified = [canonical_curve(c) for c in known_disks]
    pending = [c for c in curves if c not in certified]
    while pending:
        ok = [c for c in pending if bounds_disk(c, reference, certified)]
        if not ok:
            raise PantsError(f"curve does not bound a disk in the reference handlebody: {pending[0].serialize()}")
        certified += ok
        pending = [c for c in pending if c not in ok]
    n = expected_count(g)
    candidates = list(reference.curves) + [c for c in (pool or curve_pool(g)) if weight(c) <= weight_bound]
    candidates = list(dict.fromkeys(c for c in candidates if c not in curves))

    def extend(chosen, start):
        if len(chosen) == n:
            try:
                return pants_from_curves(g, chosen)
            except PantsError:
                return None
        for i in range(start, len(candidates)):
            c = candidates[i]
            if not _disjoint_from_all(c, chosen):
                continue
            if not bounds_disk(c, reference, chosen):
                continue
            found = extend(chosen + [c], i + 1)
            if found is not None:
                return found
        return None

    result = extend(curves, 0)
    if result is None:
        raise PantsError("completion not found within weight bound")
    return result


def neighbors(p, candidates, kinds=("A",)):
    """Decompositions one move of the given kinds away, onto a candidate curve."""
    out = []
    for new in candidates:
        if new in p.curves:
            continue
        for old in p.curves:
            rest = [c for c in p.curves if c != old]
            if not _disjoint_from_all(new, rest):
                continue
            try:
                q = pants_from_curves(p.genus, rest + [new])
            except PantsError:
                continue
            if classify_edge(p, q).kind in kinds:
                out.append(q)
    return out


def a_path(p1, p2, depth=PATH_DEPTH, pool=()):
    """Shortest path of A-edges from p1 to p2 (vertices after p1), or NotFound."""
    try:
        same = lagrangian_of(p1) == lagrangian_of(p2)
    except SymplecticError as exc:
        raise PantsError(str(exc)) from None
    if not same:
        raise PantsError("different handlebody sets (homological obstruction)")
    if p1 == p2:
        return []
    candidates = list(dict.fromkeys(list(p2.curves) + [canonical_curve(c) for c in pool]))
    prev = {p1: None}
    queue = deque([(p1, 0)])
    while queue:
        p, d = queue.popleft()
        if d == depth:
            continue
        for q in neighbors(p, candidates):
            if q in prev:
                continue
            prev[q] = p
            if q == p2:
                path = [q]
                while prev[path[-1]] != p1:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append((q, d + 1))
    return NotFound


@lru_cache(maxsize=None)
def standard_cut_system(genus):
    """Cut system of the standard handlebody: one (1,1)-slope curve in each handle."""
    return tuple(canonical_curve(curve_from_sides(genus, (4 * i + 1, 4 * i + 2))) for i in range(genus))


@lru_cache(maxsize=None)
def dual_cut_system(genus):
    """The a_i curves, each meeting the matching standard curve once."""
    return tuple(canonical_curve(curve_from_sides(genus, (4 * i + 1,))) for i in range(genus))


@lru_cache(maxsize=None)
def standard_decomposition(genus):
    """Standard cut system together with the boundaries of the handles."""
    curves = list(standard_cut_system(genus))
    if genus >= 2:
        handles = range(1 if genus == 2 else genus)
        curves += [canonical_curve(curve_from_sides(genus, tuple(range(4 * i, 4 * i + 4)))) for i in handles]
    return pants_from_curves(genus, curves)
