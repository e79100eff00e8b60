"""Walkthrough: how the strata of the subset space glue onto each other.

When two circle points merge, the band chart runs into a boundary point of
the half-plane; when the middle point of a triple slides into a neighbor,
the triple chart traces a straight line whose slope remembers the two fixed
points.  This script samples both degenerations and checks them against the
closed-form predictions.
"""

import math

from expcircle.config import (
    FiniteSubset,
    edge_collapse_limit,
    fold_to_domain,
    hausdorff_distance,
    normalize_triple,
    pair_coalescence_limit,
    pair_frame,
    to_boundary,
    triple_coalescence_path,
)
from expcircle.moebius import frame

print("=" * 72)
print("1. Two points merging: the pair chart runs to the point 1 + 0i")
print("=" * 72)

r = to_boundary(2 * math.atan(0.0))  # the boundary point 0
lim = pair_coalescence_limit(r)
print(f"predicted limit point {lim.limit_point}, direction {lim.direction:.6f} (= pi)")
for p in (1e-2, 1e-4, 1e-6):
    f = pair_frame(to_boundary(2 * math.atan(p)), r)
    print(f"  p = {p:>8g}: z = {f.z:.8f}   |z - 1| = {abs(f.z - 1):.2e}   theta = {f.theta:.6f}")
print("the distance to 1 shrinks linearly with p, the direction stays put")

print()
print("=" * 72)
print("2. A triple degenerating: straight lines of predicted slope")
print("=" * 72)

for (pv, rv) in ((0.0, 1.0), (0.0, -1.0), (2.0, 5.0)):
    p, r = to_boundary(2 * math.atan(pv)), to_boundary(2 * math.atan(rv))
    path = triple_coalescence_path(p, r)
    print(f"\np = {pv}, r = {rv}: slope (p - r)/(1 + p r) = {path.slope:.6f}, "
          f"folded endpoint {path.endpoint}")
    for d in (1e-2, 1e-3, 1e-4):
        q = to_boundary(2 * math.atan(rv) - d)
        z = path.sample_z(q)
        print(f"  q at distance {d:g}: xi(i) = {z:.8f}   Im/Re = {z.imag / z.real:.6f}")

print()
print("=" * 72)
print("3. Folding into the wedge domain finds the gluing corner")
print("=" * 72)

pv, rv = 0.0, 1.0
p, r = to_boundary(2 * math.atan(pv)), to_boundary(2 * math.atan(rv))
path = triple_coalescence_path(p, r)
print(f"slope {path.slope} < 0: the in-domain representative approaches {path.endpoint}")
for d in (1e-2, 1e-4, 1e-6):
    q = to_boundary(2 * math.atan(rv) - d)
    raw = frame(normalize_triple(p, q, r))
    folded = fold_to_domain(raw)
    print(f"  d = {d:g}: raw z = {raw.z:.6f}, folded z = {folded.z:.6f}, "
          f"|folded - endpoint| = {abs(folded.z - path.endpoint):.2e}")

print()
print("=" * 72)
print("4. All three points together: collapse to a singleton")
print("=" * 72)

alpha = 1.0
seq = [FiniteSubset([alpha - e, alpha, alpha + e]) for e in (0.1, 0.01, 1e-4, 1e-7)]
for s in seq:
    print(f"  {s}: distance to {{alpha}} = {hausdorff_distance(s, FiniteSubset([alpha])):.2e}")
out = edge_collapse_limit(seq)
print(f"edge collapse limit: tag {out.tag}, angle {out.c1:.9f} (alpha = {alpha})")
