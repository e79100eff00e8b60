"""Arithmetic of PSL(2, R) acting on the upper half-plane and its boundary circle.

A Moebius map is stored as a real 2x2 matrix of determinant 1 with a canonical
sign (first nonzero entry positive), so equality of group elements is equality
of matrices.  Boundary points of the half-plane are projective pairs, which
removes every special case around infinity.  The frame map sends a group
element T to the pair (T(i), arg dT/dz(i)) and identifies PSL(2, R) with
H x S^1; the named elements gamma, tau and sigma_lambda generate the
stabilizers used to put small subsets of the boundary circle in normal form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# Entrywise tolerance for group-element comparisons.
MATRIX_TOL = 1e-12
# Tolerance for angle comparisons modulo 2*pi.
ANGLE_TOL = 1e-9


def norm_angle(theta: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:  # fmod can land exactly on 2*pi after the correction
        t -= TWO_PI
    return t + 0.0  # clear the sign of -0.0


def angle_dist(a: float, b: float) -> float:
    """Distance between two angles modulo 2*pi, in [0, pi]."""
    d = abs(norm_angle(a) - norm_angle(b))
    return min(d, TWO_PI - d)


class BoundaryPoint:
    """Point of the boundary circle R u {oo} as a projective pair (a : b).

    The pair is normalized to a^2 + b^2 = 1 with the first nonzero coordinate
    positive, so two points are equal iff their stored pairs agree within
    tolerance.  (1, 0) is the point at infinity.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: float, b: float):
        n = math.hypot(a, b)
        if n < 1e-15:
            raise ValueError("boundary point needs a nonzero pair")
        a, b = a / n, b / n
        if a < -MATRIX_TOL or (abs(a) <= MATRIX_TOL and b < 0.0):
            a, b = -a, -b
        self.a = a
        self.b = b

    @classmethod
    def from_real(cls, x: float) -> "BoundaryPoint":
        return cls(x, 1.0)

    @classmethod
    def infinity(cls) -> "BoundaryPoint":
        return cls(1.0, 0.0)

    def is_infinity(self, tol: float = ANGLE_TOL) -> bool:
        return abs(self.b) <= tol

    def value(self) -> float:
        """Real coordinate a/b; raises at infinity."""
        if self.is_infinity():
            raise ValueError("boundary point at infinity has no real value")
        return self.a / self.b

    def approx_eq(self, other: "BoundaryPoint", tol: float = ANGLE_TOL) -> bool:
        return abs(self.a - other.a) <= tol and abs(self.b - other.b) <= tol

    def __repr__(self):
        if self.is_infinity():
            return "BoundaryPoint(oo)"
        return f"BoundaryPoint({self.value():.12g})"


def cross(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Projective determinant [p, q]; zero iff the points coincide."""
    return p.a * q.b - p.b * q.a


@dataclass(frozen=True)
class Frame:
    """Image of a group element under the frame map: a point z of the
    upper half-plane together with the direction theta in [0, 2*pi) of the
    derivative at i.  The scale of the derivative carries no information and
    is dropped.
    """

    z: complex
    theta: float

    def __post_init__(self):
        if self.z.imag <= 0.0:
            raise ValueError("frame point must lie in the open upper half-plane")
        object.__setattr__(self, "theta", norm_angle(self.theta))

    def approx_eq(self, other: "Frame", tol: float = ANGLE_TOL) -> bool:
        return abs(self.z - other.z) <= tol and angle_dist(self.theta, other.theta) <= tol


class MoebiusMap:
    """Element of PSL(2, R): matrix [[a, b], [c, d]], det 1, canonical sign."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: float, b: float, c: float, d: float):
        det = a * d - b * c
        if det <= 0.0:
            raise ValueError(f"matrix must have positive determinant, got {det!r}")
        # Keep entries bit-stable when the matrix is already normalized:
        # renormalizing a normalized matrix must be the identity map on bits.
        if abs(det - 1.0) > 1e-12:
            s = math.sqrt(det)
            a, b, c, d = a / s, b / s, c / s, d / s
        for x in (a, b, c, d):
            if abs(x) > MATRIX_TOL:
                if x < 0.0:
                    a, b, c, d = -a, -b, -c, -d
                break
        # adding 0.0 clears -0.0 entries left over from the sign flip
        self.a, self.b, self.c, self.d = a + 0.0, b + 0.0, c + 0.0, d + 0.0

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def approx_eq(self, other: "MoebiusMap", tol: float = MATRIX_TOL) -> bool:
        return all(abs(x - y) <= tol for x, y in zip(self.entries(), other.entries()))

    def __repr__(self):
        return f"MoebiusMap({self.a:.12g}, {self.b:.12g}, {self.c:.12g}, {self.d:.12g})"

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)


def identity() -> MoebiusMap:
    return MoebiusMap(1.0, 0.0, 0.0, 1.0)


def compose(s: MoebiusMap, t: MoebiusMap) -> MoebiusMap:
    """Group law: the map z -> s(t(z))."""
    return MoebiusMap(
        s.a * t.a + s.b * t.c,
        s.a * t.b + s.b * t.d,
        s.c * t.a + s.d * t.c,
        s.c * t.b + s.d * t.d,
    )


def gamma() -> MoebiusMap:
    """The order-3 element z -> (z - 1)/z cyclically permuting (0, 1, oo)."""
    return MoebiusMap(1.0, -1.0, 1.0, 0.0)


def tau() -> MoebiusMap:
    """The order-2 element z -> -1/z swapping 0 and oo."""
    return MoebiusMap(0.0, -1.0, 1.0, 0.0)


def sigma(lam: float) -> MoebiusMap:
    """The scaling z -> lam * z for lam > 0."""
    if lam <= 0.0:
        raise ValueError(f"sigma needs a positive scale, got {lam!r}")
    r = math.sqrt(lam)
    return MoebiusMap(r, 0.0, 0.0, 1.0 / r)


def apply_boundary(t: MoebiusMap, x: BoundaryPoint) -> BoundaryPoint:
    """Projective action on the boundary circle."""
    return BoundaryPoint(t.a * x.a + t.b * x.b, t.c * x.a + t.d * x.b)


def apply_interior(t: MoebiusMap, z: complex) -> complex:
    """Action (az + b)/(cz + d) on the open upper half-plane."""
    z = complex(z)
    if z.imag <= 0.0:
        raise ValueError("apply_interior needs Im z > 0")
    return (t.a * z + t.b) / (t.c * z + t.d)


def frame(t: MoebiusMap) -> Frame:
    """Frame of t: z = t(i) and theta = arg dt/dz(i) = arg 1/(ci + d)^2."""
    i = 1j
    w = t.c * i + t.d
    z = (t.a * i + t.b) / w
    theta = norm_angle(-2.0 * cmath.phase(w))
    return Frame(z, theta)


def gamma_frame_action(f: Frame) -> Frame:
    """Action of gamma on frames: (z, theta) -> (gamma(z), theta - 2 arg z).

    This is the frame-coordinate form of left composition with gamma; tau acts
    on theta the same way but sends z to -1/z.
    """
    return Frame(apply_interior(gamma(), f.z), f.theta - 2.0 * cmath.phase(f.z))


def tau_frame_action(f: Frame) -> Frame:
    """Action of tau on frames: (z, theta) -> (-1/z, theta - 2 arg z)."""
    return Frame(apply_interior(tau(), f.z), f.theta - 2.0 * cmath.phase(f.z))
