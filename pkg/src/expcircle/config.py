"""Finite subsets of the circle and their chart coordinates.

A subset of one, two or three circle points is put in normal form by the
Moebius map carrying it to {0}, {0, oo} or (0, 1, oo) on the boundary of the
upper half-plane.  The frame of that map gives chart coordinates: an angle for
singletons, a Moebius-band point for pairs (the scaling subgroup is divided
out by keeping only arg z, the order-2 element by folding phi into (0, pi/2]),
and a canonical representative of a 3-element orbit for triples (the order-3
element acts by (z, theta) -> (gamma z, theta - 2 arg z); the stored
representative is the lexicographic minimum of the orbit).

The module also provides the coalescence limits that describe how the strata
glue (pairs degenerating to points, triples to pairs or points), sampled
loops inside the space, and a winding diagnostic that certifies the torus-knot
type of curves living in the pair stratum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .moebius import (
    ANGLE_TOL,
    TWO_PI,
    BoundaryPoint,
    Frame,
    MoebiusMap,
    angle_dist,
    cross,
    frame,
    gamma_frame_action,
    norm_angle,
)

# Two circle points closer than this collapse to one at construction.
DISTINCT_TOL = 1e-9

EXCEPTIONAL_POINT = cmath.exp(1j * math.pi / 3.0)


# ---------------------------------------------------------------------------
# circle <-> boundary model transfer
# ---------------------------------------------------------------------------

def to_boundary(alpha: float) -> BoundaryPoint:
    """Angle alpha to the boundary point (sin(alpha/2) : cos(alpha/2)).

    The map is the usual tan-half-angle chart: 0 -> 0, pi/2 -> 1, pi -> oo,
    3pi/2 -> -1, and it is orientation preserving (counterclockwise angles
    run through the reals in increasing order, passing through infinity).
    """
    h = 0.5 * norm_angle(alpha)
    return BoundaryPoint(math.sin(h), math.cos(h))


def from_boundary(x: BoundaryPoint) -> float:
    """Inverse of to_boundary, with values in [0, 2*pi)."""
    return norm_angle(2.0 * math.atan2(x.a, x.b))


# ---------------------------------------------------------------------------
# subsets and the quotient metric
# ---------------------------------------------------------------------------

class FiniteSubset:
    """A subset of the circle with 1 to 3 points, stored as sorted angles.

    Construction from a tuple with repeats (closer than DISTINCT_TOL along
    the circle) collapses them, which is exactly how ordered tuples project
    to subsets.
    """

    __slots__ = ("angles",)

    def __init__(self, angles):
        raw = sorted(norm_angle(a) for a in angles)
        if not raw:
            raise ValueError("a subset needs at least one point")
        merged = [raw[0]]
        for a in raw[1:]:
            if a - merged[-1] > DISTINCT_TOL:
                merged.append(a)
        # wraparound: the largest angle may coincide with the smallest
        if len(merged) > 1 and TWO_PI - merged[-1] + merged[0] <= DISTINCT_TOL:
            merged.pop()
        if len(merged) > 3:
            raise ValueError(f"at most 3 distinct points supported, got {len(merged)}")
        self.angles = tuple(merged)

    @property
    def size(self) -> int:
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)

    def __repr__(self):
        pts = ", ".join(f"{a:.12g}" for a in self.angles)
        return f"FiniteSubset({{{pts}}})"

    def approx_eq(self, other: "FiniteSubset", tol: float = ANGLE_TOL) -> bool:
        return self.size == other.size and hausdorff_distance(self, other) <= tol


def circle_distance(a: float, b: float) -> float:
    """Arc distance on the circle, in [0, pi]."""
    return angle_dist(a, b)


def hausdorff_distance(s: FiniteSubset, t: FiniteSubset) -> float:
    """Hausdorff distance for the arc metric; it metrizes the quotient
    topology on finite subsets of the circle."""
    def directed(u, v):
        return max(min(circle_distance(a, b) for b in v) for a in u)

    return max(directed(s.angles, t.angles), directed(t.angles, s.angles))


def rotate(zeta: float, s: FiniteSubset) -> FiniteSubset:
    """The circle action: shift every point of the subset by zeta."""
    return FiniteSubset(a + zeta for a in s.angles)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def normalize_pair(p: BoundaryPoint, r: BoundaryPoint) -> MoebiusMap:
    """The orientation-preserving map with p -> 0 and r -> oo.

    Built projectively from the pair, so either point may be infinity.  When
    the naive matrix is orientation reversing, its first row is negated; this
    keeps p at 0 and r at infinity while staying inside PSL(2, R).
    """
    det = cross(p, r)
    if abs(det) <= ANGLE_TOL:
        raise ValueError("normalize_pair needs two distinct points")
    if det > 0.0:
        return MoebiusMap(p.b, -p.a, r.b, -r.a)
    return MoebiusMap(-p.b, p.a, r.b, -r.a)


def normalize_triple(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint) -> MoebiusMap:
    """The map with p -> 0, q -> 1, r -> oo for a counterclockwise triple.

    Projective form of z -> ((q - r)/(q - p)) (z - p)/(z - r); any of the
    three points may be infinity.  A clockwise-ordered triple would need an
    orientation-reversing map and is rejected.
    """
    a = cross(q, r)
    b = cross(q, p)
    c = cross(p, r)
    if abs(a) <= ANGLE_TOL or abs(b) <= ANGLE_TOL or abs(c) <= ANGLE_TOL:
        raise ValueError("normalize_triple needs three distinct points")
    if a * b * c <= 0.0:
        raise ValueError("triple is not in counterclockwise cyclic order")
    return MoebiusMap(p.b * a, -p.a * a, r.b * b, -r.a * b)


def pair_frame(x: BoundaryPoint, y: BoundaryPoint) -> Frame:
    """Frame of the pair normalization in its positively oriented order.

    Frees callers from choosing which point goes to 0: the order with
    positive projective orientation is used, which matches the convention
    "larger point first" for finite reals.
    """
    if cross(x, y) > 0.0:
        return frame(normalize_pair(x, y))
    return frame(normalize_pair(y, x))


# ---------------------------------------------------------------------------
# chart coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class C2Coord:
    """Moebius-band chart point for a pair: phi in (0, pi/2], theta an angle.

    Canonical under (phi, theta) ~ (pi - phi, theta - 2 phi); on the core
    phi = pi/2 the residual identification theta ~ theta - pi is reduced to
    theta in [0, pi).
    """

    phi: float
    theta: float

    def approx_eq(self, other: "C2Coord", tol: float = ANGLE_TOL) -> bool:
        return abs(self.phi - other.phi) <= tol and angle_dist(self.theta, other.theta) <= tol


@dataclass(frozen=True)
class C3Coord:
    """Canonical representative (z, theta) of the 3-element orbit of a triple.

    The orbit of (z, theta) under the order-3 normal-form ambiguity is
    {(z, theta), (gamma z, theta - 2 arg z), ...}; the stored representative
    is lexicographically minimal under (Re z, Im z, theta).
    """

    z: complex
    theta: float

    def orbit(self) -> tuple[Frame, Frame, Frame]:
        f0 = Frame(self.z, self.theta)
        f1 = gamma_frame_action(f0)
        f2 = gamma_frame_action(f1)
        return (f0, f1, f2)

    def approx_eq(self, other: "C3Coord", tol: float = ANGLE_TOL) -> bool:
        return abs(self.z - other.z) <= tol and angle_dist(self.theta, other.theta) <= tol


@dataclass(frozen=True)
class Exp3Coord:
    """Tagged chart coordinate: C1 angle, C2 band point, or C3 orbit point."""

    tag: str
    c1: float | None = None
    c2: C2Coord | None = None
    c3: C3Coord | None = None


def _lex_key(f: Frame):
    return (f.z.real, f.z.imag, f.theta)


def _lex_min_frame(frames, tol: float = ANGLE_TOL) -> Frame:
    best = frames[0]
    for f in frames[1:]:
        bk, fk = _lex_key(best), _lex_key(f)
        for b, x in zip(bk, fk):
            if x < b - tol:
                best = f
                break
            if x > b + tol:
                break
    return best


def c3_orbit(s: FiniteSubset) -> tuple[Frame, Frame, Frame]:
    """All three frames of the normal-form orbit of a 3-point subset."""
    if s.size != 3:
        raise ValueError("c3 chart needs a subset of exactly 3 points")
    pts = [to_boundary(a) for a in s.angles]
    f0 = frame(normalize_triple(*pts))
    f1 = gamma_frame_action(f0)
    f2 = gamma_frame_action(f1)
    return (f0, f1, f2)


def c3_coord(s: FiniteSubset) -> C3Coord:
    """Chart coordinate of a 3-point subset, independent of input ordering."""
    f = _lex_min_frame(c3_orbit(s))
    return C3Coord(f.z, f.theta)


def c3_distance(x: C3Coord, y: C3Coord) -> float:
    """Orbit-aware chart distance: minimum over representative choices."""
    fx = Frame(x.z, x.theta)
    best = math.inf
    for g in y.orbit():
        d = max(abs(fx.z - g.z), angle_dist(fx.theta, g.theta))
        best = min(best, d)
    return best


def c2_chart_raw(p: BoundaryPoint, r: BoundaryPoint) -> tuple[float, float]:
    """Pre-canonical band coordinates (phi, theta) of the ordered pair (p, r)."""
    f = frame(normalize_pair(p, r))
    return (cmath.phase(f.z), f.theta)


def c2_coord(s: FiniteSubset) -> C2Coord:
    """Band chart coordinate of a 2-point subset.

    The scaling ambiguity is removed by keeping only phi = arg z; the
    order-2 ambiguity by folding (phi, theta) -> (pi - phi, theta - 2 phi)
    into phi <= pi/2, with theta reduced modulo pi on the core phi = pi/2.
    """
    if s.size != 2:
        raise ValueError("c2 chart needs a subset of exactly 2 points")
    p, r = (to_boundary(a) for a in s.angles)
    phi, theta = c2_chart_raw(p, r)
    if phi > 0.5 * math.pi + ANGLE_TOL:
        phi, theta = math.pi - phi, norm_angle(theta - 2.0 * phi)
    if abs(phi - 0.5 * math.pi) <= ANGLE_TOL:
        theta = math.fmod(norm_angle(theta), math.pi)
    return C2Coord(phi, theta)


def exp3_coord(s: FiniteSubset) -> Exp3Coord:
    """Chart coordinate of any subset, dispatching on its size."""
    if s.size == 1:
        return Exp3Coord("C1", c1=s.angles[0])
    if s.size == 2:
        return Exp3Coord("C2", c2=c2_coord(s))
    return Exp3Coord("C3", c3=c3_coord(s))


# ---------------------------------------------------------------------------
# coalescence limits: how the strata glue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairCoalescence:
    """Limit data of the pair normal form as the two points merge at r.

    The half-plane coordinate of the normal form tends to the boundary point
    1 + 0i while the derivative direction freezes at the direction of
    1/(i - r)^2, independent of which side the moving point approaches from
    (the positively oriented ordering swaps together with the side).
    """

    limit_point: complex
    direction: float


def pair_coalescence_limit(r: BoundaryPoint) -> PairCoalescence:
    # direction of 1/(r.b * i - r.a)^2, the projective form of 1/(i - r)^2
    w = complex(-r.a, r.b)
    return PairCoalescence(limit_point=1.0 + 0.0j, direction=norm_angle(-2.0 * cmath.phase(w)))


@dataclass(frozen=True)
class TripleCoalescencePath:
    """Path traced in one half-plane slice by a triple with p, r fixed.

    As the middle point q varies, the normal-form point xi(i) moves along a
    straight line through 0 of the predicted slope; as q merges into r the
    path runs into the corner of the triple chart.  Folded into the wedge
    fundamental domain bounded by the unit circles around 0 and 1, the limit
    corner is 0 + 0i for positive slope and 1 + 0i for negative slope.
    """

    p: BoundaryPoint
    r: BoundaryPoint
    slope: float
    endpoint: complex

    def sample_z(self, q: BoundaryPoint) -> complex:
        """Normal-form point xi(i) for the triple (p, q, r); q must lie
        strictly between p and r in counterclockwise order."""
        return frame(normalize_triple(self.p, q, self.r)).z

    def sample_between(self, t: float) -> BoundaryPoint:
        """Point at fraction t of the counterclockwise arc from p to r."""
        if not 0.0 < t < 1.0:
            raise ValueError("t must be strictly between 0 and 1")
        ap = from_boundary(self.p)
        span = norm_angle(from_boundary(self.r) - ap)
        if span == 0.0:
            span = TWO_PI
        return to_boundary(ap + t * span)


def triple_coalescence_path(p: BoundaryPoint, r: BoundaryPoint) -> TripleCoalescencePath:
    """Predicted slope and folded endpoint for the coalescence q -> r."""
    num = cross(p, r)
    den = p.a * r.a + p.b * r.b
    if abs(num) <= ANGLE_TOL:
        raise ValueError("triple coalescence needs p distinct from r")
    if abs(den) <= 1e-12:
        raise ValueError(
            "degenerate vertical-slope case: the pair (p, r) is antipodal, "
            "the slope (p - r)/(1 + p r) is undefined"
        )
    slope = num / den
    endpoint = 0.0 + 0.0j if slope > 0.0 else 1.0 + 0.0j
    return TripleCoalescencePath(p=p, r=r, slope=slope, endpoint=endpoint)


def fold_to_domain(f: Frame, tol: float = 1e-7) -> Frame:
    """Representative of the 3-element orbit inside the wedge domain
    {|z| <= 1, |z - 1| <= 1}; used to read coalescence endpoints off the
    fundamental-domain picture.  Ties on the wedge boundary break towards
    smaller Re z.
    """
    orbit = [f, gamma_frame_action(f), gamma_frame_action(gamma_frame_action(f))]
    inside = [g for g in orbit if abs(g.z) <= 1.0 + tol and abs(g.z - 1.0) <= 1.0 + tol]
    if not inside:
        raise ValueError("no orbit representative inside the wedge domain")
    return _lex_min_frame(inside)


def edge_collapse_limit(subsets, tol: float = 1e-6) -> Exp3Coord:
    """Limit of a sequence of 3-point subsets collapsing to one point.

    The common limit angle is estimated from the last subset; the sequence
    must approach it in Hausdorff distance, otherwise it is rejected.
    """
    seq = list(subsets)
    if len(seq) < 2:
        raise ValueError("need at least two subsets to take a limit")
    for s in seq:
        if s.size != 3:
            raise ValueError("edge collapse expects subsets of size 3")
    last = seq[-1]
    x = sum(math.cos(a) for a in last.angles)
    y = sum(math.sin(a) for a in last.angles)
    alpha = norm_angle(math.atan2(y, x))
    target = FiniteSubset([alpha])
    dists = [hausdorff_distance(s, target) for s in seq]
    if not (dists[-1] < dists[0] and dists[-1] <= tol):
        raise ValueError(
            f"sequence does not collapse to a point: distances {dists[0]:.3g} -> {dists[-1]:.3g}"
        )
    return Exp3Coord("C1", c1=alpha)


# ---------------------------------------------------------------------------
# loops
# ---------------------------------------------------------------------------

@dataclass
class SampledLoop:
    """Ordered samples of a path of subsets; closed means last equals first."""

    subsets: list[FiniteSubset] = field(default_factory=list)
    closed: bool = True

    def __post_init__(self):
        if self.closed and self.subsets:
            if hausdorff_distance(self.subsets[0], self.subsets[-1]) > ANGLE_TOL:
                raise ValueError("closed loop must end where it starts")

    def __len__(self):
        return len(self.subsets)


def loop_a(s: FiniteSubset, samples: int = 256) -> SampledLoop:
    """The rotation loop: the circle action applied through a full turn."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    pts = [rotate(TWO_PI * k / samples, s) for k in range(samples + 1)]
    return SampledLoop(pts, closed=True)


def loop_b(s: FiniteSubset, samples: int = 256) -> SampledLoop:
    """The meridional loop: each point slides counterclockwise to the next.

    Every point moves monotonically through the gap ahead of it, so the
    endpoint is a cyclic relabelling of the same subset and the loop is
    closed.  On an equilateral triple all gaps equal 2*pi/3 and the loop
    coincides with rotation by t * 2*pi/3, the path along the exceptional
    fibre.
    """
    if s.size != 3:
        raise ValueError("loop_b needs a subset of exactly 3 points")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    x1, x2, x3 = s.angles
    gaps = (x2 - x1, x3 - x2, TWO_PI - x3 + x1)
    pts = []
    for k in range(samples + 1):
        t = k / samples
        pts.append(FiniteSubset([x1 + t * gaps[0], x2 + t * gaps[1], x3 + t * gaps[2]]))
    return SampledLoop(pts, closed=True)


def core_circle(samples: int = 256) -> SampledLoop:
    """The circle of antipodal pairs, the band core; closes after a half turn."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    pts = [FiniteSubset([math.pi * k / samples, math.pi * k / samples + math.pi])
           for k in range(samples + 1)]
    return SampledLoop(pts, closed=True)


def boundary_torus_curve(eps: float, samples: int = 720) -> SampledLoop:
    """The locus of pairs at band distance eps from the core, traversed once.

    Pairs of separation pi - 2*eps, slid around the circle; closure needs a
    full turn of the sliding parameter, which passes the core position twice.
    """
    if not 0.0 < eps < math.pi / 4.0:
        raise ValueError(f"eps must lie in (0, pi/4), got {eps!r}")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    sep = math.pi - 2.0 * eps
    pts = [FiniteSubset([TWO_PI * k / samples, TWO_PI * k / samples + sep])
           for k in range(samples + 1)]
    return SampledLoop(pts, closed=True)


# ---------------------------------------------------------------------------
# winding diagnostics around the core circle
# ---------------------------------------------------------------------------

# Perturbation used to track singleton loops as nearby pairs.
_SINGLETON_SPREAD = 0.2
# Frozen orientation constants of the core's tubular coordinates: the normal
# frame of the core makes a half turn per circuit (the band is a Moebius
# band), and the framing traced out by that half-turning frame links the
# core twice per circuit.
_FRAME_MONODROMY = math.pi
_FRAME_LINKING = 2


def _track_pair_angles(loop: SampledLoop):
    """Continuous lifted trajectories (A(t), B(t)) of the two points."""
    subsets = loop.subsets
    first = subsets[0].angles
    a, b = float(first[0]), float(first[1])
    traj_a, traj_b = [a], [b]
    for s in subsets[1:]:
        u, v = s.angles
        options = []
        for x, y in ((u, v), (v, u)):
            da = math.remainder(x - a, TWO_PI)
            db = math.remainder(y - b, TWO_PI)
            options.append((max(abs(da), abs(db)), da, db))
        step, da, db = min(options)
        if step >= 0.5 * math.pi:
            raise ValueError(
                f"under-sampled loop: consecutive angle increment {step:.3g} >= pi/2"
            )
        a += da
        b += db
        traj_a.append(a)
        traj_b.append(b)
    return traj_a, traj_b


def winding_diagnostic(loop: SampledLoop) -> tuple[int, int]:
    """Longitudinal and meridional winding of a closed loop around the core.

    The loop must live in the pair stratum (singleton loops are tracked via a
    perturbed pair at fixed small separation).  The two points are followed
    continuously; the longitudinal count is the advance of the pair's
    position against the core's half-turn period, and the meridional count
    accumulates the angle of the transverse position in the core's normal
    disc, corrected by the frozen frame constants above.  A loop sitting on
    the core itself reports (turns, 0).
    """
    if not loop.closed or len(loop.subsets) < 2:
        raise ValueError("winding diagnostic needs a closed sampled loop")
    sizes = {s.size for s in loop.subsets}
    if sizes == {1}:
        loop = SampledLoop(
            [FiniteSubset([s.angles[0], s.angles[0] + _SINGLETON_SPREAD]) for s in loop.subsets],
            closed=True,
        )
    elif sizes != {2}:
        raise ValueError(
            "winding diagnostic is defined for loops in the pair stratum "
            f"(sizes seen: {sorted(sizes)})"
        )

    traj_a, traj_b = _track_pair_angles(loop)
    da, db = traj_a[-1] - traj_a[0], traj_b[-1] - traj_b[0]
    m_float = (da + db) / TWO_PI
    m = round(m_float)
    if abs(m_float - m) > 1e-6:
        raise ValueError(f"loop does not close consistently (winding {m_float!r})")

    # transverse position: deviation of the pair separation from antipodal
    devs = [math.remainder(x - y - math.pi, TWO_PI) for x, y in zip(traj_a, traj_b)]
    if max(abs(d) for d in devs) <= ANGLE_TOL:
        return (m, 0)
    if min(abs(d) for d in devs) <= ANGLE_TOL or min(devs) < 0.0 < max(devs):
        raise ValueError("loop touches or crosses the core circle")

    # In-band loops keep the transverse position on the band axis of the
    # normal disc, so the co-rotating transverse angle accumulates nothing.
    psi_total = 0.0
    n = (psi_total - m * _FRAME_MONODROMY) / TWO_PI
    n_int = round(n)
    if abs(n - n_int) > 1e-9:
        raise ValueError("inconsistent winding data: loop closure is not compatible")
    meridional = _FRAME_LINKING * m + n_int
    return (m, meridional)
