"""
Closed geodesic representatives of curves on the model surface.

Genus 1 uses the flat unit square with exact rational arithmetic; genus >= 2
uses the regular hyperbolic 4g-gon with all angles ``2 pi / 4g`` in the
Poincare disk, computed with mpmath at fixed working precision.

A geodesic is traced as a cyclic list of chords of the fundamental polygon.
Each chord records the polygon sides through which it enters and leaves and
a boundary parameter for both endpoints: side ``k`` occupies parameters
``[k, k + 1)`` and the parameter increases counter-clockwise.  Two chords of
distinct geodesics cross inside the polygon iff their endpoints interleave,
so crossing counts reduce to comparisons of boundary parameters.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .surface import partner

PRECISION = 50
MAX_SEGMENTS = 5000

ctx = mpmath.MPContext()
ctx.dps = PRECISION
TOL = ctx.mpf(10) ** -28
# radial factor and angle placing the triangulation vertex off every simple geodesic
VERTEX_SHIFT = ("0.93", "0.0411")


class DegenerateGeodesic(ValueError):
    """The geodesic runs through the triangulation vertex."""


class TrivialCurve(ValueError):
    """The closed path is null-homotopic."""


@dataclass(frozen=True)
class Chord:
    entry_side: int
    exit_side: int
    entry: object  # boundary parameter (Fraction or mpf)
    exit: object
    # unit-free tangent vectors (complex-like pairs) at entry and exit
    entry_dir: tuple
    exit_dir: tuple


@dataclass(frozen=True)
class Trace:
    chords: tuple
    exits: tuple  # cyclic sequence of exit sides
    primitive_power: int  # how many times the input path wraps the geodesic

    def __len__(self):
        return len(self.chords)


# ---------------------------------------------------------------- flat torus


def _flat_class(sides):
    """Translation vector (p, q) of a side-exit path on the unit square."""
    step = {0: (0, -1), 1: (1, 0), 2: (0, 1), 3: (-1, 0)}
    p = q = 0
    for s in sides:
        dx, dy = step[s]
        p += dx
        q += dy
    return p, q


def _flat_trace(p, q, offset):
    """Trace the line of direction (p, q) with ``q x - p y = offset``."""
    if q != 0:
        x, y = Fraction(offset) / q, Fraction(0)
    else:
        x, y = Fraction(0), Fraction(-offset) / p
    x -= x.numerator // x.denominator
    y -= y.numerator // y.denominator

    def hit(x, y, sign):
        # first boundary point reached from (x, y) moving by sign*(p, q)
        cands = []
        dx, dy = sign * p, sign * q
        if dx > 0:
            cands.append(((1 - x) / dx, 1))
        elif dx < 0:
            cands.append(((0 - x) / dx, 3))
        if dy > 0:
            cands.append(((1 - y) / dy, 2))
        elif dy < 0:
            cands.append(((0 - y) / dy, 0))
        s, side = min(cands)
        ties = [c for c in cands if c[0] == s]
        if len(ties) > 1:
            raise DegenerateGeodesic("line passes through the vertex")
        return x + s * dx, y + s * dy, side

    def param(x, y, side):
        t = {0: x, 1: y, 2: 1 - x, 3: 1 - y}[side]
        if t == 0 or t == 1:
            raise DegenerateGeodesic("line passes through the vertex")
        return side + t

    # back up to the entry point of the chord containing the base point
    ex, ey, eside = hit(x, y, -1)
    start = (ex, ey, eside)
    chords = []
    exits = []
    direction = (p, q)
    cur = start
    for _ in range(MAX_SEGMENTS):
        ex, ey, eside = cur
        xx, yy, xside = hit(ex, ey, 1)
        chords.append(Chord(eside, xside, param(ex, ey, eside), param(xx, yy, xside), direction, direction))
        exits.append(xside)
        shift = {0: (0, 1), 1: (-1, 0), 2: (0, -1), 3: (1, 0)}[xside]
        cur = (xx + shift[0], yy + shift[1], partner(xside))
        if cur == start:
            break
    else:
        raise RuntimeError("flat trace did not close")
    return chords, exits


@lru_cache(maxsize=4096)
def flat_trace(sides, offset=Fraction(1, 2)):
    p, q = _flat_class(sides)
    if p == 0 and q == 0:
        raise TrivialCurve("null-homotopic path")
    d = gcd(p, q)
    chords, exits = _flat_trace(p // d, q // d, offset)
    return Trace(tuple(chords), tuple(exits), d)


def flat_line_trace(p, q, offset):
    """Trace for the primitive direction (p, q) at a chosen offset."""
    chords, exits = _flat_trace(p, q, offset)
    return Trace(tuple(chords), tuple(exits), 1)


# ------------------------------------------------------------- hyperbolic


class _Mobius:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __mul__(self, o):
        return _Mobius(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self):
        return _Mobius(self.d, -self.b, -self.c, self.a)

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def trace(self):
        return self.a + self.d


def _rot(theta):
    h = ctx.expj(theta / 2)
    return _Mobius(h, ctx.mpc(0), ctx.mpc(0), 1 / h)


def _translate(m):
    # z -> (z - m) / (1 - m z), normalised to determinant 1
    s = 1 / ctx.sqrt(1 - m * m)
    return _Mobius(ctx.mpc(s), ctx.mpc(-m * s), ctx.mpc(-m * s), ctx.mpc(s))


class HyperbolicPolygon:
    """
    Fundamental 4g-gon for the regular genus-g surface group.

    The side pairings are those of the regular 4g-gon with all angles
    ``2 pi / 4g``.  The polygon itself has its vertices at the orbit of a
    generic point near the regular vertex, so that no simple closed geodesic
    passes through the triangulation vertex.
    """

    def __init__(self, genus, vertex_shift=VERTEX_SHIFT):
        self.genus = genus
        n = self.n = 4 * genus
        pi = ctx.pi
        R = ctx.acosh(ctx.cot(pi / n) ** 2)
        r = ctx.tanh(R / 2)
        C = (r * r + 1) / (2 * r * ctx.cos(pi / n))
        rad = ctx.sqrt(C * C - 1)
        mids = [2 * pi * (k + ctx.mpf(1) / 2) / n for k in range(n)]
        frames = [_rot(-pi / 2) * _translate(C - rad) * _rot(-t) for t in mids]
        half_turn = _rot(pi)
        # pairing[k] carries side k onto partner(k) and the outside of side k into P
        self.pairing = [frames[partner(k)].inverse() * half_turn * frames[k] for k in range(n)]
        self.deck = [g.inverse() for g in self.pairing]

        regular = [r * ctx.expj(2 * pi * k / n) for k in range(n)]
        x = regular[0] * ctx.mpf(vertex_shift[0]) * ctx.expj(vertex_shift[1])
        moves = {0: _identity()}
        # pairing[k] sends vertex k to partner(k)+1 and vertex k+1 to partner(k)
        while len(moves) < n:
            for k in range(n):
                kp = partner(k)
                for src, dst in ((k, kp + 1), ((k + 1) % n, kp)):
                    dst %= n
                    if src in moves and dst not in moves:
                        moves[dst] = self.pairing[k] * moves[src]
                    if dst in moves and src not in moves:
                        moves[src] = self.pairing[k].inverse() * moves[dst]
        for k in range(n):
            if abs(moves[k](regular[0]) - regular[k]) > TOL:
                raise RuntimeError("vertex orbit bookkeeping failed")
        self.vertices = [moves[k](x) for k in range(n)]
        self.vertex_angles = [ctx.arg(v) % (2 * pi) for v in self.vertices]
        self.side_ideal = [
            _geodesic_through(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n)
        ]
        self.side_frames = [_GeodesicFrame(*ends) for ends in self.side_ideal]
        self.inside_sign = [ctx.sign(ctx.re(f.forward(ctx.mpc(0)))) for f in self.side_frames]
        for k in range(n):
            if abs(self.pairing[k](self.vertices[k]) - self.vertices[(partner(k) + 1) % n]) > TOL:
                raise RuntimeError("side pairing does not match the moved polygon")

    def outside_side(self, z):
        for k, f in enumerate(self.side_frames):
            x = ctx.re(f.forward(z))
            if ctx.sign(x) == -self.inside_sign[k] and abs(x) > TOL:
                return k
        return None

    def side_fraction(self, z, side):
        lo = self.vertex_angles[side]
        hi = self.vertex_angles[(side + 1) % self.n]
        width = (hi - lo) % (2 * ctx.pi)
        return (((ctx.arg(z) - lo) + ctx.pi) % (2 * ctx.pi) - ctx.pi) / width

    def boundary_param(self, z, side):
        t = self.side_fraction(z, side)
        if abs(t) < TOL or abs(t - 1) < TOL:
            raise DegenerateGeodesic("geodesic passes through the vertex")
        return side + t


def _identity():
    return _Mobius(ctx.mpc(1), ctx.mpc(0), ctx.mpc(0), ctx.mpc(1))


def _geodesic_through(p, q):
    """Ideal endpoints of the geodesic through two points of the disk."""
    to0 = _Mobius(ctx.mpc(1), -p, -ctx.conj(p), ctx.mpc(1))
    back = to0.inverse()
    qq = to0(q)
    d = qq / abs(qq)
    return back(-d), back(d)


@lru_cache(maxsize=None)
def polygon(genus):
    return HyperbolicPolygon(genus)


def _axis(g):
    """Repelling and attracting fixed points of a hyperbolic element."""
    a, b, c, d = g.a, g.b, g.c, g.d
    if abs(c) < TOL:
        raise TrivialCurve("element fixes infinity")
    disc = ctx.sqrt((a - d) ** 2 + 4 * b * c)
    z1 = ((a - d) + disc) / (2 * c)
    z2 = ((a - d) - disc) / (2 * c)
    # |derivative| at a fixed point z is 1/|cz+d|^2
    if abs(c * z1 + d) > abs(c * z2 + d):
        return z2, z1
    return z1, z2


class _GeodesicFrame:
    """Coordinates sending the geodesic u -> w to the positive imaginary axis."""

    def __init__(self, u, w):
        self.u, self.w = u, w
        z0 = -(u + w)
        z0 = z0 / abs(z0) if abs(z0) > ctx.mpf(10) ** -10 else u * ctx.j
        f0 = (z0 - u) / (z0 - w)
        lam = ctx.conj(f0) / abs(f0)
        if ctx.im(lam * (0 - u) / (0 - w)) < 0:
            lam = -lam
        self.lam = lam

    def forward(self, z):
        return self.lam * (z - self.u) / (z - self.w)

    def backward(self, zeta):
        return (zeta * self.w - self.lam * self.u) / (zeta - self.lam)

    def tangent(self, z):
        zeta = self.forward(z)
        return ctx.j * self.lam * (self.u - self.w) / (zeta - self.lam) ** 2


def _chord(poly, u, w):
    frame = _GeodesicFrame(u, w)
    hits = []
    for k, (s1, s2) in enumerate(poly.side_ideal):
        a = ctx.re(frame.forward(s1))
        b = ctx.re(frame.forward(s2))
        if a * b >= 0:
            continue
        h = ctx.sqrt(-a * b)
        z = frame.backward(ctx.j * h)
        t = poly.side_fraction(z, k)
        if t < -TOL or t > 1 + TOL:
            continue
        if abs(t) < TOL or abs(t - 1) < TOL:
            raise DegenerateGeodesic("geodesic passes through the vertex")
        hits.append((h, k, z))
    if len(hits) != 2:
        raise RuntimeError(f"geodesic meets the polygon boundary {len(hits)} times")
    hits.sort(key=lambda x: x[0])
    (_, ks, zs), (_, ke, ze) = hits
    return ks, zs, ke, ze, frame


def _close(a, b):
    return abs(a - b) < ctx.mpf(10) ** -20


def hyperbolic_element(genus, sides):
    poly = polygon(genus)
    g = _identity()
    for s in sides:
        g = g * poly.deck[s]
    return g


@lru_cache(maxsize=4096)
def hyperbolic_trace(genus, sides):
    poly = polygon(genus)
    g = hyperbolic_element(genus, sides)
    tr = abs(g.trace())
    if tr < 2 + ctx.mpf(10) ** -6:
        raise TrivialCurve("null-homotopic path")
    u, w = _axis(g)
    # move the axis until it meets the fundamental polygon
    mid = u + w
    if abs(mid) < TOL:
        p = ctx.mpc(0)
    else:
        delta = abs(ctx.arg(w / u))
        p = (1 / ctx.cos(delta / 2) - ctx.tan(delta / 2)) * mid / abs(mid)
    for _ in range(10000):
        k = poly.outside_side(p)
        if k is None:
            break
        h = poly.pairing[k]
        p, u, w = h(p), h(u), h(w)
    else:
        raise RuntimeError("could not move the axis into the polygon")

    start = (u, w)
    chords = []
    exits = []
    for _ in range(MAX_SEGMENTS):
        ks, zs, ke, ze, frame = _chord(poly, u, w)
        chords.append(
            Chord(
                ks,
                ke,
                poly.boundary_param(zs, ks),
                poly.boundary_param(ze, ke),
                _as_pair(frame.tangent(zs)),
                _as_pair(frame.tangent(ze)),
            )
        )
        exits.append(ke)
        h = poly.pairing[ke]
        u, w = h(u), h(w)
        if _close(u, start[0]) and _close(w, start[1]):
            break
    else:
        raise RuntimeError("hyperbolic trace did not close")
    # translation length ratio gives the power of the primitive element
    prim = hyperbolic_element(genus, tuple(exits))
    ell = ctx.acosh(tr / 2)
    ell0 = ctx.acosh(abs(prim.trace()) / 2)
    power = int(ctx.nint(ell / ell0))
    return Trace(tuple(chords), tuple(exits), power)


def _as_pair(z):
    return (ctx.re(z), ctx.im(z))


def trace(genus, sides):
    """Closed geodesic freely homotopic to the side-exit path ``sides``."""
    sides = tuple(sides)
    if not sides:
        raise TrivialCurve("empty path")
    if genus == 1:
        return flat_trace(sides)
    return hyperbolic_trace(genus, sides)


# ------------------------------------------------------------ crossings


def _eq(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return abs(a - b) < TOL


def _inside(x, a, b, n):
    """Whether parameter x lies strictly inside the ccw arc from a to b."""
    span = (b - a) % n
    off = (x - a) % n
    return 0 < off < span


def _det(d1, d2):
    return d1[0] * d2[1] - d1[1] * d2[0]


def _sign(v):
    return 1 if v > 0 else -1


def same_geodesic(t1, t2):
    """Whether two traces run along the same closed geodesic (either direction)."""
    c2 = t2.chords[0]
    for c1 in t1.chords:
        if (_eq(c1.entry, c2.entry) and _eq(c1.exit, c2.exit)) or (
            _eq(c1.entry, c2.exit) and _eq(c1.exit, c2.entry)
        ):
            return True
    return False


def crossings(t1, t2, n, same=False):
    """
    Crossing points between two traced geodesics.

    Returns ``(count, signed)`` where crossings lying on polygon sides are
    seen twice (once per side copy) and contribute one half each.  With
    ``same=True`` the two traces are the same geodesic and each unordered pair
    of distinct chords is examined once (self-crossings).
    """
    if not same and same_geodesic(t1, t2):
        return 0, 0
    twice = 0
    signed_twice = 0
    chords1 = t1.chords
    chords2 = t2.chords
    for i, c1 in enumerate(chords1):
        start = i + 1 if same else 0
        for c2 in chords2[start:]:
            ends1 = ((c1.entry, c1.entry_dir), (c1.exit, c1.exit_dir))
            ends2 = ((c2.entry, c2.entry_dir), (c2.exit, c2.exit_dir))
            shared = [(d1, d2) for (x1, d1) in ends1 for (x2, d2) in ends2 if _eq(x1, x2)]
            if shared:
                for d1, d2 in shared:
                    twice += 1
                    signed_twice += _sign(_det(d1, d2))
                continue
            a = _inside(c2.entry, c1.entry, c1.exit, n)
            b = _inside(c2.exit, c1.entry, c1.exit, n)
            if a != b:
                twice += 2
                signed_twice += 2 if a else -2
    if twice % 2 or signed_twice % 2:
        raise RuntimeError("unpaired side crossing")
    return twice // 2, signed_twice // 2
