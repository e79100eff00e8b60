"""Walkthrough: Moebius normal forms and chart coordinates for circle subsets.

Any three boundary points of the hyperbolic plane can be carried to
(0, 1, oo) by a unique orientation-preserving Moebius map up to a cyclic
ambiguity of order 3; any two points go to (0, oo) up to scalings and an
order-2 flip.  Reading off where the normalizing map sends the point i, and
in which direction, turns those ambiguities into explicit chart coordinates
for subsets of the circle.  This script walks through the normal forms, the
group relations behind them, and the charts.
"""

import math

from expcircle.moebius import (
    BoundaryPoint,
    apply_boundary,
    apply_interior,
    compose,
    frame,
    gamma,
    identity,
    sigma,
    tau,
)
from expcircle.config import (
    EXCEPTIONAL_POINT,
    FiniteSubset,
    c3_coord,
    c3_orbit,
    c2_coord,
    exp3_coord,
    normalize_triple,
    to_boundary,
)

print("=" * 72)
print("1. The three named isometries and their relations")
print("=" * 72)

g, t = gamma(), tau()
print(f"gamma = {g}   (cyclically permutes 0 -> oo -> 1 -> 0)")
print(f"tau   = {t}   (swaps 0 and oo)")
print(f"gamma^3 = {compose(g, compose(g, g))}")
print(f"tau^2   = {compose(t, t)}")
print(f"tau sigma_3 tau = {compose(t, compose(sigma(3.0), t))}  (equals sigma_{{1/3}})")
print(f"sigma_2 sigma_5 = {compose(sigma(2.0), sigma(5.0))}  (equals sigma_10)")

zero, one, inf = BoundaryPoint.from_real(0.0), BoundaryPoint.from_real(1.0), BoundaryPoint.infinity()
print("\ngamma on the boundary:",
      f"1 -> {apply_boundary(g, one)}, oo -> {apply_boundary(g, inf)}, 0 -> {apply_boundary(g, zero)}")

fixed = EXCEPTIONAL_POINT
print(f"gamma fixes e^(i pi/3): gamma({fixed:.6f}) = {apply_interior(g, fixed):.6f}")

print()
print("=" * 72)
print("2. The frame map: group elements as (point of H, direction)")
print("=" * 72)

for name, m in [("identity", identity()), ("tau", tau()), ("sigma_2", sigma(2.0))]:
    f = frame(m)
    print(f"frame({name}) = (z = {f.z:.6f}, theta = {f.theta:.6f})")

print()
print("=" * 72)
print("3. Normalizing a triple of circle points")
print("=" * 72)

angles = [0.2, 1.9, 4.4]
s = FiniteSubset(angles)
pts = [to_boundary(a) for a in angles]
xi = normalize_triple(*pts)
print(f"subset {s}")
print(f"normal form xi = {xi}")
for p, target in zip(pts, ("0", "1", "oo")):
    print(f"  xi({p}) = {apply_boundary(xi, p)}   (should be {target})")

c = c3_coord(s)
print(f"chart coordinate: z = {c.z:.6f}, theta = {c.theta:.6f}")
print("the full order-3 orbit of the normal form:")
for f in c3_orbit(s):
    print(f"  (z = {f.z:.6f}, theta = {f.theta:.6f})")

print()
print("=" * 72)
print("4. The exceptional fibre: equally spaced triples")
print("=" * 72)

eq = FiniteSubset([0.0, 2 * math.pi / 3, 4 * math.pi / 3])
c = c3_coord(eq)
print(f"equilateral triple chart: z = {c.z:.9f} (= e^(i pi/3)), theta = {c.theta:.9f}")
thetas = sorted(f.theta for f in c3_orbit(eq))
print(f"orbit directions {[f'{x:.6f}' for x in thetas]}: spaced by 2 pi / 3")

print()
print("=" * 72)
print("5. Pairs: the band chart")
print("=" * 72)

for pair in ([0.0, math.pi], [0.9, 2.1], [5.0, 5.9]):
    s = FiniteSubset(pair)
    c = c2_coord(s)
    print(f"pair {s}: phi = {c.phi:.6f}, theta = {c.theta:.6f}"
          + ("   <- antipodal: the band core" if abs(c.phi - math.pi / 2) < 1e-9 else ""))

print()
print("every subset gets a tagged chart point:")
for pts in ([1.0], [1.0, 2.0], [1.0, 2.0, 3.0]):
    print(f"  {pts} -> {exp3_coord(FiniteSubset(pts)).tag}")
