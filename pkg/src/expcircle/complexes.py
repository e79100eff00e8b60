"""Simplicial models of subset spaces of the circle and integer homology.

The k-fold torus carries the permutation-symmetric staircase triangulation,
so both the coordinate-permutation action and the finer identification of
tuples with equal underlying sets act simplicially.  Quotients are taken
after two barycentric subdivisions, the standard regularity margin that makes
the identified complex compute the homology of the identified space; the
second subdivision is streamed straight into the quotient so the large
intermediate complex is never materialized.

Homology is computed over the integers through Smith normal form with exact
(arbitrary precision) arithmetic: a sparse elimination phase consumes all
unit pivots by greedy minimal fill, and a dense textbook pass finishes the
small remainder and restores the divisibility chain.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd


# ---------------------------------------------------------------------------
# simplicial complexes
# ---------------------------------------------------------------------------

class SimplicialComplex:
    """Finite simplicial complex: vertices 0..n-1 and sorted vertex tuples
    per dimension, closed under taking faces."""

    def __init__(self, vertex_count: int, simplices_by_dim):
        self.vertex_count = vertex_count
        self.simplices = [sorted(set(map(tuple, s))) for s in simplices_by_dim]
        while self.simplices and not self.simplices[-1]:
            self.simplices.pop()
        self._validate()

    def _validate(self):
        if not self.simplices or len(self.simplices[0]) != self.vertex_count:
            raise ValueError("dimension 0 must list every vertex exactly once")
        have = [set(s) for s in self.simplices]
        for d in range(1, len(self.simplices)):
            for s in self.simplices[d]:
                if len(set(s)) != d + 1:
                    raise ValueError(f"degenerate simplex {s} in dimension {d}")
                if list(s) != sorted(s):
                    raise ValueError(f"unsorted simplex {s}")
                for f in combinations(s, d):
                    if f not in have[d - 1]:
                        raise ValueError(f"missing face {f} of {s}")

    @classmethod
    def from_maximal(cls, simplices):
        """Close a set of simplices (any dimensions) under taking faces."""
        by_dim: dict[int, set] = {}
        for s in simplices:
            s = tuple(sorted(set(s)))
            for k in range(1, len(s) + 1):
                by_dim.setdefault(k - 1, set()).update(combinations(s, k))
        if not by_dim:
            raise ValueError("empty complex")
        verts = sorted(v for (v,) in by_dim[0])
        if verts != list(range(len(verts))):
            raise ValueError("vertices must be 0..n-1 with no gaps")
        dim = max(by_dim)
        return cls(len(verts), [sorted(by_dim.get(d, ())) for d in range(dim + 1)])

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(s) for s in self.simplices]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(s) for d, s in enumerate(self.simplices))

    def __repr__(self):
        return f"SimplicialComplex(counts={self.counts()})"


def circle_complex(n: int) -> SimplicialComplex:
    """The n-gon triangulation of a circle."""
    if n < 3:
        raise ValueError("polygon needs n >= 3")
    return SimplicialComplex.from_maximal([(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# text interchange format
# ---------------------------------------------------------------------------

def complex_to_text(k: SimplicialComplex) -> str:
    """One simplex per line: dimension then sorted vertex ids."""
    lines = [f"# simplicial complex, counts {k.counts()}"]
    for d, ss in enumerate(k.simplices):
        for s in ss:
            lines.append(f"{d} " + " ".join(map(str, s)))
    return "\n".join(lines) + "\n"


def complex_from_text(text: str) -> SimplicialComplex:
    by_dim: dict[int, set] = {}
    vertex_count = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        d = int(parts[0])
        verts = tuple(int(v) for v in parts[1:])
        if len(verts) != d + 1:
            raise ValueError(f"dimension {d} simplex with {len(verts)} vertices: {raw!r}")
        by_dim.setdefault(d, set()).add(tuple(sorted(verts)))
        vertex_count = max(vertex_count, max(verts) + 1)
    if not by_dim:
        raise ValueError("no simplices in input")
    dim = max(by_dim)
    return SimplicialComplex(vertex_count, [sorted(by_dim.get(d, ())) for d in range(dim + 1)])


# ---------------------------------------------------------------------------
# barycentric subdivision
# ---------------------------------------------------------------------------

def _proper_faces(s):
    for k in range(1, len(s)):
        yield from combinations(s, k)


def _subdivision_data(k: SimplicialComplex):
    """Vertex ids of the subdivision: one per simplex, in dimension order."""
    ids = {}
    origin = []
    for ss in k.simplices:
        for s in ss:
            ids[s] = len(origin)
            origin.append(s)
    return ids, origin


def _chains_by_dim(k: SimplicialComplex, ids):
    """All chains of the face poset, as id tuples; a chain of length L is an
    (L-1)-simplex of the subdivision.  Ids increase along every chain because
    they are assigned in dimension order."""
    memo: dict[tuple, list] = {}
    for ss in k.simplices:
        for s in ss:
            sid = ids[s]
            cs = [(sid,)]
            for f in _proper_faces(s):
                for c in memo[f]:
                    cs.append(c + (sid,))
            memo[s] = cs
    out = [[] for _ in range(k.dim + 1)]
    for cs in memo.values():
        for c in cs:
            out[len(c) - 1].append(c)
    return out


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """First barycentric subdivision (combinatorial flags construction)."""
    ids, origin = _subdivision_data(k)
    return SimplicialComplex(len(origin), _chains_by_dim(k, ids))


def _lift_near(x: Fraction, ref: Fraction, n: int) -> Fraction:
    """Representative of x modulo n within n/2 of ref; valid because every
    simplex in the torus pipeline has diameter below n/2."""
    d = (x - ref) % n
    if 2 * d > n:
        d -= n
    return ref + d


def _barycenter(simplex, coords, n):
    pts = [coords[v] for v in simplex]
    ref = pts[0]
    k = len(ref)
    out = []
    for j in range(k):
        lifted = [_lift_near(p[j], ref[j], n) for p in pts]
        out.append((sum(lifted) / len(lifted)) % n)
    return tuple(out)


# ---------------------------------------------------------------------------
# torus complexes and quotients
# ---------------------------------------------------------------------------

def build_torus_complex(k: int, n: int) -> SimplicialComplex:
    """Staircase (Freudenthal) triangulation of the k-torus on an n-grid.

    Each grid cube is cut into k! simplices along coordinate orderings; the
    triangulation is invariant under permuting the torus coordinates.
    """
    cx, _ = _torus_complex_with_coords(k, n)
    return cx


def _torus_complex_with_coords(k: int, n: int):
    if k not in (2, 3):
        raise ValueError(f"only k = 2 or 3 supported, got {k}")
    if n < 3:
        raise ValueError(f"grid must have n >= 3 subdivisions, got {n}")

    def vid(pt):
        out = 0
        for x in pt:
            out = out * n + int(x) % n
        return out

    tops = set()
    for base_idx in range(n**k):
        base = []
        t = base_idx
        for _ in range(k):
            base.append(t % n)
            t //= n
        for perm in permutations(range(k)):
            v = list(base)
            simplex = [vid(v)]
            for axis in perm:
                v[axis] += 1
                simplex.append(vid(v))
            tops.add(tuple(sorted(simplex)))
    cx = SimplicialComplex.from_maximal(tops)
    coords = []
    for i in range(n**k):
        digits = []
        t = i
        for _ in range(k):
            digits.append(Fraction(t % n))
            t //= n
        coords.append(tuple(reversed(digits)))
    return cx, coords


def coordinate_permutation_action(k: int, n: int) -> list[list[int]]:
    """Vertex permutations of the torus grid induced by transposing the
    first two coordinates and by cycling all coordinates; these generate the
    full symmetric group acting on the torus complex."""
    def vid(pt):
        out = 0
        for x in pt:
            out = out * n + x % n
        return out

    def induced(cperm):
        table = [0] * (n**k)
        for i in range(n**k):
            digits = []
            t = i
            for _ in range(k):
                digits.append(t % n)
                t //= n
            pt = list(reversed(digits))
            table[i] = vid([pt[cperm[j]] for j in range(k)])
        return table

    gens = [induced([1, 0] + list(range(2, k)))]
    if k > 2:
        gens.append(induced(list(range(1, k)) + [0]))
    return gens


def _close_group(vertex_count: int, generators) -> list[tuple]:
    idgen = tuple(range(vertex_count))
    group = {idgen}
    frontier = [idgen]
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(vertex_count)):
            raise ValueError("group generator is not a permutation of the vertices")
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                hg = tuple(h[g[i]] for i in range(vertex_count))
                if hg not in group:
                    group.add(hg)
                    nxt.append(hg)
        frontier = nxt
        if len(group) > 10000:
            raise ValueError("group closure too large")
    return sorted(group)


def _check_simplicial(k: SimplicialComplex, perm) -> None:
    for d in range(1, k.dim + 1):
        have = set(k.simplices[d])
        for s in k.simplices[d]:
            img = tuple(sorted(perm[v] for v in s))
            if len(set(img)) != d + 1 or img not in have:
                raise ValueError("action does not carry simplices to simplices")


def _identify_after_two_subdivisions(k1: SimplicialComplex, key_fn, mark_fn=None):
    """Subdivide k1 once more, identifying along key_fn on the fly.

    k1 is the first subdivision; its simplices are the vertices of the
    second.  key_fn maps an sd1 simplex to a hashable identification key;
    equal keys become one quotient vertex.  mark_fn, when given, maps an sd1
    simplex to a bitmask; a quotient simplex is marked when some preimage
    chain has a nonzero AND of its element masks (used to trace subcomplexes
    through the quotient).  Raises if the identification degenerates a
    simplex, the telltale of an insufficiently subdivided action.
    """
    ids, origin = _subdivision_data(k1)
    qid_by_key: dict = {}
    qid_of_vertex = []
    for s in origin:
        key = key_fn(s)
        if key not in qid_by_key:
            qid_by_key[key] = len(qid_by_key)
        qid_of_vertex.append(qid_by_key[key])
    masks = [mark_fn(s) for s in origin] if mark_fn else None

    dim = k1.dim
    out = [set() for _ in range(dim + 1)]
    marked = [set() for _ in range(dim + 1)] if mark_fn else None
    memo: dict[tuple, list] = {}
    for ss in k1.simplices:
        for s in ss:
            sid = ids[s]
            cs = [(sid,)]
            for f in _proper_faces(s):
                for c in memo[f]:
                    cs.append(c + (sid,))
            memo[s] = cs
            for c in cs:
                q = tuple(sorted(qid_of_vertex[v] for v in c))
                if len(set(q)) != len(q):
                    raise ValueError(
                        "identification degenerates a simplex; the action is not "
                        "regular even after two subdivisions"
                    )
                d = len(q) - 1
                out[d].add(q)
                if mark_fn:
                    m = masks[c[0]]
                    for v in c[1:]:
                        m &= masks[v]
                    if m:
                        marked[d].add(q)
    cx = SimplicialComplex(len(qid_by_key), [sorted(s) for s in out])
    if mark_fn:
        return cx, [sorted(s) for s in marked]
    return cx


def quotient_complex(k: SimplicialComplex, generators) -> SimplicialComplex:
    """Quotient of a complex by a finite simplicial group action.

    The action is given by vertex permutations (generators suffice); it is
    validated to be simplicial, closed into the full group, and applied after
    two barycentric subdivisions, so the result computes the homology of the
    topological quotient.
    """
    group = _close_group(k.vertex_count, generators)
    for perm in group:
        _check_simplicial(k, perm)
    ids, origin = _subdivision_data(k)
    k1 = SimplicialComplex(len(origin), _chains_by_dim(k, ids))
    if len(group) == 1:
        return _identify_after_two_subdivisions(k1, key_fn=lambda s: s)

    # lift the action from vertices of k to simplices of k (= vertices of k1)
    lifted = []
    for perm in group:
        lifted.append([ids[tuple(sorted(perm[v] for v in s))] for s in origin])

    def key_fn(s):
        return min(tuple(sorted(table[v] for v in s)) for table in lifted)

    return _identify_after_two_subdivisions(k1, key_fn)


def _exp_key(coords1, n):
    """Identification key for the subset-space quotient: the underlying set
    of the tuple's coordinates.  This merges coordinate permutations and
    collapses repeated entries onto smaller subsets in one stroke."""
    def key_fn(s):
        bc = _barycenter(s, coords1, n)
        return tuple(sorted(set(bc)))

    return key_fn


def _diagonal_mask(coords1, n, k):
    pairs = list(combinations(range(k), 2))

    def mark_fn(s):
        bc = _barycenter(s, coords1, n)
        m = 0
        for bit, (i, j) in enumerate(pairs):
            if (bc[i] - bc[j]) % n == 0:
                m |= 1 << bit
        return m

    return mark_fn


def _build_exp_with_boundary(k: int, n: int):
    """Subset-space complex plus the subcomplex of degenerate tuples
    (the image of the smaller subset space inside it)."""
    k0, coords0 = _torus_complex_with_coords(k, n)
    ids0, origin0 = _subdivision_data(k0)
    chains0 = _chains_by_dim(k0, ids0)
    k1 = SimplicialComplex(len(origin0), chains0)
    coords1 = [_barycenter(s, coords0, n) for s in origin0]
    return _identify_after_two_subdivisions(
        k1, key_fn=_exp_key(coords1, n), mark_fn=_diagonal_mask(coords1, n, k)
    )


def build_exp_complex(k: int, n: int) -> SimplicialComplex:
    """Simplicial model of the space of subsets of at most k circle points.

    Tuples of the k-torus are identified exactly when they have the same
    underlying set; this refines the coordinate-permutation quotient by also
    collapsing repeated coordinates onto smaller subsets, which is what the
    subset space requires.
    """
    cx, _ = _build_exp_with_boundary(k, n)
    return cx


# ---------------------------------------------------------------------------
# integer chain complexes and Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    """Finitely generated abelian group: free rank and torsion coefficients
    in divisibility order (each > 1)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyResult:
    """Integer homology per dimension."""

    groups: tuple[AbelianInvariants, ...]

    @property
    def betti(self) -> list[int]:
        return [g.rank for g in self.groups]

    @property
    def torsion(self) -> list[tuple[int, ...]]:
        return [g.torsion for g in self.groups]

    def __str__(self):
        return "; ".join(f"H_{d} = {g}" for d, g in enumerate(self.groups))


class SparseIntMatrix:
    """Integer matrix in row-major sparse form with a column index."""

    def __init__(self, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}
        self.col_rows: dict[int, set[int]] = {}

    @classmethod
    def from_triplets(cls, nrows, ncols, triplets):
        m = cls(nrows, ncols)
        for r, c, v in triplets:
            m.set(r, c, int(v))
        return m

    @classmethod
    def from_dense(cls, dense):
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        m = cls(nrows, ncols)
        for r, row in enumerate(dense):
            for c, v in enumerate(row):
                if v:
                    m.rows.setdefault(r, {})[c] = int(v)
                    m.col_rows.setdefault(c, set()).add(r)
        return m

    def set(self, r, c, v):
        if v:
            self.rows.setdefault(r, {})[c] = v
            self.col_rows.setdefault(c, set()).add(r)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def copy(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.nrows, self.ncols)
        m.rows = {r: dict(row) for r, row in self.rows.items()}
        m.col_rows = {c: set(rs) for c, rs in self.col_rows.items()}
        return m

    def mul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = SparseIntMatrix(self.nrows, other.ncols)
        for r, row in self.rows.items():
            acc: dict[int, int] = {}
            for k, v in row.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for c, w in orow.items():
                    acc[c] = acc.get(c, 0) + v * w
            for c, v in acc.items():
                if v:
                    out.rows.setdefault(r, {})[c] = v
                    out.col_rows.setdefault(c, set()).add(r)
        return out


def _dense_snf(a, track: bool = False):
    """Textbook Smith normal form on a dense list-of-lists of python ints.

    Returns the diagonal invariants (nonzero, divisibility-ordered); when
    track is set, also unimodular U, V with U @ M @ V = D.
    """
    a = [list(map(int, row)) for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    v = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def row_op(i, j, q):  # row_i -= q * row_j
        ai, aj = a[i], a[j]
        for c in range(n):
            ai[c] -= q * aj[c]
        if track:
            ui, uj = u[i], u[j]
            for c in range(m):
                ui[c] -= q * uj[c]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(m):
            a[r][i] -= q * a[r][j]
        if track:
            for r in range(n):
                v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        if track:
            for r in range(n):
                v[r][i], v[r][j] = v[r][j], v[r][i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if track:
            u[i] = [-x for x in u[i]]

    diag = []
    t = 0
    while True:
        pivot = None
        best = None
        for r in range(t, m):
            row = a[r]
            for c in range(t, n):
                x = abs(row[c])
                if x and (best is None or x < best):
                    best, pivot = x, (r, c)
                    if x == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            moved = False
            for r in range(t + 1, m):
                if a[r][t]:
                    q = a[r][t] // p
                    row_op(r, t, q)
                    if a[r][t]:
                        swap_rows(t, r)
                        moved = True
                        break
            if moved:
                continue
            for c in range(t + 1, n):
                if a[t][c]:
                    q = a[t][c] // p
                    col_op(c, t, q)
                    if a[t][c]:
                        swap_cols(t, c)
                        moved = True
                        break
            if not moved:
                break
        diag.append(a[t][t])
        t += 1

    def ext_gcd(x, y):
        old_r, r = x, y
        old_s, s = 1, 0
        old_t, tt = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, tt = tt, old_t - q * tt
        return old_r, old_s, old_t

    # restore the divisibility chain d1 | d2 | ... ; with tracking, each
    # repair is the unimodular 2x2 identity
    #   [[s, t], [-y/g, x/g]] @ diag(x, y) @ [[1, -t y/g], [1, s x/g]]
    #   = diag(g, x y / g)          where  s x + t y = g.
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            if y % x:
                g, s0, t0 = ext_gcd(x, y)
                diag[i], diag[i + 1] = g, x // g * y
                changed = True
                if track:
                    j = i + 1
                    for mat in (a, u):
                        ri, rj = mat[i], mat[j]
                        mat[i] = [s0 * p + t0 * q for p, q in zip(ri, rj)]
                        mat[j] = [-(y // g) * p + (x // g) * q for p, q in zip(ri, rj)]
                    for mat in (a, v):
                        for row in mat:
                            ci, cj = row[i], row[j]
                            row[i] = ci + cj
                            row[j] = -(t0 * y // g) * ci + (s0 * x // g) * cj
    if track:
        return diag, u, v
    return diag


def smith_normal_form(matrix, with_transforms: bool = False):
    """Diagonal invariants d1 | d2 | ... of an integer matrix.

    Accepts a dense list of rows or a SparseIntMatrix.  Small matrices go
    straight to the dense routine; larger ones run a sparse unit-pivot
    elimination (greedy minimal fill-in) first, with exact arithmetic
    throughout.  With with_transforms (dense inputs only), also returns
    unimodular U, V such that U M V has the invariants on its diagonal.
    """
    if isinstance(matrix, SparseIntMatrix):
        if with_transforms:
            raise ValueError("transforms are only tracked for dense inputs")
        if matrix.nrows < 200 and matrix.ncols < 200:
            return _dense_snf(matrix.to_dense())
        return _sparse_snf_invariants(matrix.copy())
    if with_transforms:
        diag, u, v = _dense_snf(matrix, track=True)
        return diag, u, v
    return _dense_snf(matrix)


def _sparse_snf_invariants(m: SparseIntMatrix):
    rows, col_rows = m.rows, m.col_rows
    heap = []
    for r, row in rows.items():
        for c, v in row.items():
            if v in (1, -1):
                heap.append(((len(row) - 1) * (len(col_rows[c]) - 1), r, c))
    heapq.heapify(heap)
    units = 0
    while heap:
        cost, r, c = heapq.heappop(heap)
        row = rows.get(r)
        if row is None:
            continue
        v = row.get(c)
        if v not in (1, -1):
            continue
        cur = (len(row) - 1) * (len(col_rows[c]) - 1)
        if cur > cost:
            heapq.heappush(heap, (cur, r, c))
            continue
        # eliminate pivot (r, c)
        prow = rows.pop(r)
        for cc in prow:
            col_rows[cc].discard(r)
        if v < 0:
            prow = {cc: -vv for cc, vv in prow.items()}
        for rr in list(col_rows.get(c, ())):
            target = rows[rr]
            mult = target[c]
            for cc, vv in prow.items():
                w = target.get(cc, 0) - mult * vv
                if w:
                    target[cc] = w
                    col_rows[cc].add(rr)
                else:
                    if cc in target:
                        del target[cc]
                        col_rows[cc].discard(rr)
            if not target:
                del rows[rr]
                continue
            for cc, vv in target.items():
                if vv in (1, -1):
                    heapq.heappush(
                        heap, ((len(target) - 1) * (len(col_rows[cc]) - 1), rr, cc)
                    )
        col_rows.pop(c, None)
        units += 1
    # whatever remains has no unit entries; finish densely
    leftover_rows = sorted(rows)
    leftover_cols = sorted({c for row in rows.values() for c in row})
    diag = [1] * units
    if leftover_rows:
        cindex = {c: i for i, c in enumerate(leftover_cols)}
        dense = [[0] * len(leftover_cols) for _ in leftover_rows]
        for i, r in enumerate(leftover_rows):
            for c, v in rows[r].items():
                dense[i][cindex[c]] = v
        diag += _dense_snf(dense)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            if y % x:
                g = gcd(x, y)
                diag[i], diag[i + 1] = g, x // g * y
                changed = True
    return diag


class ChainComplexZ:
    """Integer chain complex: ranks per degree and boundary matrices."""

    def __init__(self, dims: list[int], boundaries: list[SparseIntMatrix]):
        # boundaries[d] is the map C_{d+1} -> C_d, so len(boundaries) = top dim
        self.dims = list(dims)
        self.boundaries = boundaries
        if len(boundaries) != max(len(dims) - 1, 0):
            raise ValueError("need one boundary matrix per positive degree")
        for d, b in enumerate(boundaries):
            if b.nrows != dims[d] or b.ncols != dims[d + 1]:
                raise ValueError(f"boundary {d + 1} has shape {b.nrows}x{b.ncols}")

    def check_boundary_squared(self) -> bool:
        for low, high in zip(self.boundaries, self.boundaries[1:]):
            if low.mul(high).nnz() != 0:
                return False
        return True

    def homology(self) -> HomologyResult:
        if not self.check_boundary_squared():
            raise ValueError("boundary of boundary is nonzero")
        top = len(self.dims) - 1
        invs = [smith_normal_form(b) for b in self.boundaries]
        groups = []
        for d in range(top + 1):
            rank_in = len(invs[d]) if d < top else 0  # rank of d_{d+1}
            rank_out = len(invs[d - 1]) if d > 0 else 0  # rank of d_d
            betti = self.dims[d] - rank_out - rank_in
            torsion = tuple(x for x in invs[d] if x > 1) if d < top else ()
            groups.append(AbelianInvariants(betti, torsion))
        return HomologyResult(tuple(groups))


def chain_complex(k: SimplicialComplex) -> ChainComplexZ:
    """Simplicial chain complex with the orientation from sorted vertices."""
    dims = k.counts()
    boundaries = []
    for d in range(1, k.dim + 1):
        index = {s: i for i, s in enumerate(k.simplices[d - 1])}
        mat = SparseIntMatrix(dims[d - 1], dims[d])
        for col, s in enumerate(k.simplices[d]):
            for i in range(d + 1):
                face = s[:i] + s[i + 1:]
                mat.set(index[face], col, -1 if i % 2 else 1)
        boundaries.append(mat)
    return ChainComplexZ(dims, boundaries)


def homology(k: SimplicialComplex) -> HomologyResult:
    """Integer homology of a simplicial complex via Smith normal form."""
    return chain_complex(k).homology()


def relative_chain_complex(k: SimplicialComplex, sub_simplices) -> ChainComplexZ:
    """Chain complex of the pair (k, subcomplex): the quotient of chains.

    sub_simplices lists, per dimension, the simplices spanning the
    subcomplex; its chains are struck from the bases and from the boundary
    images.
    """
    sub = [set(map(tuple, s)) for s in sub_simplices]
    sub += [set()] * (k.dim + 1 - len(sub))
    bases = []
    for d in range(k.dim + 1):
        bases.append([s for s in k.simplices[d] if s not in sub[d]])
    dims = [len(b) for b in bases]
    boundaries = []
    for d in range(1, k.dim + 1):
        index = {s: i for i, s in enumerate(bases[d - 1])}
        mat = SparseIntMatrix(dims[d - 1], dims[d])
        for col, s in enumerate(bases[d]):
            for i in range(d + 1):
                face = s[:i] + s[i + 1:]
                row = index.get(face)
                if row is not None:
                    mat.set(row, col, -1 if i % 2 else 1)
        boundaries.append(mat)
    return ChainComplexZ(dims, boundaries)


def relative_quotient_homology(n: int) -> HomologyResult:
    """Homology of the subset space with its pair stratum collapsed to a
    point (k = 3): the reduced homology of the quotient is the relative
    homology of the pair, and dimension zero regains the base point.
    """
    cx, marked = _build_exp_with_boundary(3, n)
    rel = relative_chain_complex(cx, marked).homology()
    groups = list(rel.groups)
    g0 = groups[0]
    groups[0] = AbelianInvariants(g0.rank + 1, g0.torsion)
    return HomologyResult(tuple(groups))


def collapsed_cell_complex(cells_per_dim, dense_boundaries, collapsed_dims) -> HomologyResult:
    """Homology of a CW complex with a skeleton collapsed to a point.

    cells_per_dim counts the cells, dense_boundaries[d] is the matrix of the
    boundary map from (d+1)-cells to d-cells, and collapsed_dims names the
    dimensions whose cells form the collapsed subcomplex.  The reduced
    homology of the quotient is the relative homology of the pair; the base
    point restores one free rank in dimension zero.
    """
    keep = [d not in collapsed_dims for d in range(len(cells_per_dim))]
    dims = [cells_per_dim[d] if keep[d] else 0 for d in range(len(cells_per_dim))]
    boundaries = []
    for d, dense in enumerate(dense_boundaries):
        mat = SparseIntMatrix(dims[d], dims[d + 1])
        if keep[d] and keep[d + 1]:
            for r, row in enumerate(dense):
                for c, v in enumerate(row):
                    mat.set(r, c, v)
        boundaries.append(mat)
    rel = ChainComplexZ(dims, boundaries).homology()
    groups = list(rel.groups)
    groups[0] = AbelianInvariants(groups[0].rank + 1, groups[0].torsion)
    return HomologyResult(tuple(groups))


def rp3_collapse_oracle() -> HomologyResult:
    """Independent target table for relative_quotient_homology: projective
    3-space has one cell per dimension with boundary multiplications
    0, 2, 0; collapsing its 1-skeleton gives the comparison space."""
    return collapsed_cell_complex(
        cells_per_dim=[1, 1, 1, 1],
        dense_boundaries=[[[0]], [[2]], [[0]]],
        collapsed_dims={0, 1},
    )
