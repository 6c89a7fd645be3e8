"""Exact geometry of cyclic vector configurations and their zonotopes.

A cyclic configuration of n vectors in dimension d is a matrix whose
columns xi_1, ..., xi_n have first coordinate 1 and all flag minors
positive (determinants of the top k rows on any k increasing columns,
for every k <= d).  The concrete model used everywhere is the Veronese
curve at integer parameters: xi_i = (1, t_i, t_i^2, ..., t_i^(d-1))
with t_1 < ... < t_n, default t_i = i, so every coordinate is an
integer and all arithmetic below is exact (no floating point is used
anywhere in this module).

The zonotope Z(n, d) is the Minkowski sum of the segments [0, xi_i].
A subset X of [n] spans a vertex (the point sum of xi_i over i in X)
exactly when some linear functional is positive on the xi_i with i in
X and negative on the rest; for a cyclic configuration this is a sign
rule: the +/- membership sequence of X along 1..n may change sign at
most d - 1 times.  The sign rule is the production test; the rational
Fourier-Motzkin feasibility check below is kept as an oracle and the
two are compared exhaustively in the test suite.

The boundary of Z splits into a front and a rear side (outward normal
with negative resp. positive last coordinate).  Their vertex sets are
computed facet by facet from exact normals; for odd d they also have
a closed combinatorial form: the front vertices are the k-intervals
with k <= (d-1)/2, the rear vertices are their complements, and the
rim (front meets rear) drops the (d-1)/2-intervals containing neither
1 nor n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .ground import (
    check_ground,
    check_mask,
    elements,
    full_mask,
    interval_count,
    mask_of,
)
from .systems import DEFAULT_EXHAUSTIVE_BOUND, SetSystem, _check_bound

Vector = tuple[int, ...]


@dataclass(frozen=True)
class CyclicConfiguration:
    """n integer vectors of dimension d with all flag minors positive."""

    n: int
    d: int
    ts: tuple[int, ...]
    columns: tuple[Vector, ...]

    def column(self, i: int) -> Vector:
        """1-indexed generator vector."""
        return self.columns[i - 1]


def _det(rows: list[list[int]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    size = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for row in range(col, size):
            if mat[row][col]:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = mat[col][col]
        for row in range(col + 1, size):
            factor = mat[row][col] / inv
            if factor:
                for k in range(col, size):
                    mat[row][k] -= factor * mat[col][k]
    return det


def flag_minors_positive(columns: list[Vector], d: int) -> bool:
    """All determinants of top-k rows on increasing column k-subsets positive."""
    n = len(columns)
    for k in range(1, d + 1):
        for combo in combinations(range(n), k):
            rows = [[columns[c][row] for c in combo] for row in range(k)]
            if _det(rows) <= 0:
                return False
    return True


def veronese(n: int, d: int, ts: tuple[int, ...] | None = None, validate: bool = True) -> CyclicConfiguration:
    """Veronese cyclic configuration at integer parameters (default 1..n)."""
    check_ground(n)
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    if ts is None:
        ts = tuple(range(1, n + 1))
    if len(ts) != n or any(not isinstance(t, int) for t in ts):
        raise ValueError("ts must be n integers")
    if any(ts[i] >= ts[i + 1] for i in range(n - 1)):
        raise ValueError("ts must be strictly increasing")
    cols = tuple(tuple(t**j for j in range(d)) for t in ts)
    if validate and not flag_minors_positive(list(cols), d):
        raise ValueError("configuration has a nonpositive flag minor")
    return CyclicConfiguration(n=n, d=d, ts=ts, columns=cols)


def point_of(config: CyclicConfiguration, mask: int) -> Vector:
    """Vertex point of X: the sum of the generators indexed by X."""
    check_mask(mask, config.n)
    point = [0] * config.d
    for i in elements(mask):
        col = config.column(i)
        for j in range(config.d):
            point[j] += col[j]
    return tuple(point)


def sign_changes(mask: int, n: int) -> int:
    """Sign changes of the +/- membership sequence of X along 1..n."""
    changes = 0
    prev = mask & 1
    for i in range(1, n):
        cur = mask >> i & 1
        if cur != prev:
            changes += 1
            prev = cur
    return changes


def is_zonotope_vertex(mask: int, n: int, d: int) -> bool:
    """Vertex test for Z(n, d): at most d - 1 sign changes along 1..n."""
    check_ground(n)
    check_mask(mask, n)
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    return sign_changes(mask, n) <= d - 1


def normal_vector(config: CyclicConfiguration, typemask: int) -> Vector:
    """Integer normal to the span of d - 1 generators (cofactor expansion).

    The orientation is as produced by the cofactor formula; callers fix
    the sign themselves.  Raises if the configuration is degenerate on
    this type (never happens for a cyclic configuration).
    """
    idx = elements(typemask)
    if len(idx) != config.d - 1:
        raise ValueError(f"normal_vector expects a (d-1)-subset, got {idx}")
    rows = [list(config.column(i)) for i in idx]
    normal = []
    for j in range(config.d):
        minor = [[row[k] for k in range(config.d) if k != j] for row in rows]
        cof = _det(minor)
        if cof.denominator != 1:
            raise ArithmeticError("nonintegral cofactor from integer input")
        normal.append((-1) ** j * int(cof))
    if all(v == 0 for v in normal):
        raise ValueError("degenerate span: zero normal")
    return tuple(normal)


def _dot(u: Vector, v: Vector) -> int:
    return sum(a * b for a, b in zip(u, v))


def vertex_functional_exists(config: CyclicConfiguration, mask: int) -> bool:
    """Oracle: a rational c with c.xi_i > 0 on X and c.xi_i < 0 off X exists.

    Homogeneous strict feasibility by Fourier-Motzkin elimination over
    exact integers; intended for d <= 5 at desk scale.
    """
    check_mask(mask, config.n)
    rows = []
    for i in range(1, config.n + 1):
        col = config.column(i)
        if mask >> (i - 1) & 1:
            rows.append(tuple(col))
        else:
            rows.append(tuple(-x for x in col))
    return _strict_feasible(rows)


def _strict_feasible(rows: list[Vector]) -> bool:
    """Feasibility of row . c > 0 for all rows (homogeneous, strict)."""
    if not rows:
        return True
    width = len(rows[0])
    if any(all(x == 0 for x in row) for row in rows):
        return False
    if width == 1:
        return len({row[0] > 0 for row in rows}) == 1
    pos = [r for r in rows if r[-1] > 0]
    neg = [r for r in rows if r[-1] < 0]
    combined = {r[:-1] for r in rows if r[-1] == 0}
    for p in pos:
        for q in neg:
            combined.add(
                tuple(-q[-1] * p[i] + p[-1] * q[i] for i in range(width - 1))
            )
    return _strict_feasible(sorted(combined))


def boundary_vertices(n: int, d: int, bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> SetSystem:
    """All subsets of [n] spanning vertices of Z(n, d), canonically ordered."""
    _check_bound(n, bound)
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    return SetSystem.from_masks(
        n, (x for x in range(1 << n) if sign_changes(x, n) <= d - 1)
    )


def front_rear_vertices(n: int, d: int) -> tuple[SetSystem, SetSystem, SetSystem]:
    """Closed-form front, rear, and rim vertex sets of Z(n, d) for odd d.

    Front: k-intervals with k <= (d-1)/2 (the empty set is the unique
    0-interval).  Rear: complements of the front sets.  Rim: k-intervals
    with k < (d-1)/2, plus the (d-1)/2-intervals containing 1 or n.
    """
    check_ground(n)
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    if d % 2 == 0:
        raise ValueError("closed-form sides require odd d; use zonotope_sides")
    half = (d - 1) // 2
    full = full_mask(n)
    front = [x for x in range(1 << n) if interval_count(x) <= half]
    rear = [full & ~x for x in front]
    rim = [
        x
        for x in front
        if interval_count(x) < half or x & 1 or x >> (n - 1) & 1
    ]
    return (
        SetSystem.from_masks(n, front),
        SetSystem.from_masks(n, rear),
        SetSystem.from_masks(n, rim),
    )


@dataclass(frozen=True)
class ZonotopeSides:
    """Front/rear boundary facets of Z(n, d) and their vertex sets.

    Facets are (root, type) pairs: type is a (d-1)-subset spanning the
    facet's directions, root the set of generators strictly on the
    facet's side of that span.  Vertex sets are unions of facet vertex
    sets; the rim is the intersection of front and rear.
    """

    n: int
    d: int
    front_facets: tuple[tuple[int, int], ...]
    rear_facets: tuple[tuple[int, int], ...]
    front: SetSystem
    rear: SetSystem
    rim: SetSystem


def zonotope_sides(n: int, d: int) -> ZonotopeSides:
    """Front/rear split of the boundary of Z(n, d) from exact facet normals."""
    config = veronese(n, d, validate=False)
    front_facets = []
    rear_facets = []
    front_verts: set[int] = set()
    rear_verts: set[int] = set()
    for combo in combinations(range(1, n + 1), d - 1):
        typemask = mask_of(combo, n)
        normal = normal_vector(config, typemask)
        if normal[-1] == 0:
            raise ArithmeticError("facet normal with zero last coordinate")
        if normal[-1] > 0:
            normal = tuple(-x for x in normal)
        # with the outward normal pointing frontward, the root collects
        # the generators on the positive side
        front_root = 0
        rear_root = 0
        for i in range(1, n + 1):
            if typemask >> (i - 1) & 1:
                continue
            value = _dot(normal, config.column(i))
            if value == 0:
                raise ArithmeticError("generator on a facet span: not cyclic")
            if value > 0:
                front_root |= 1 << (i - 1)
            else:
                rear_root |= 1 << (i - 1)
        front_facets.append((front_root, typemask))
        rear_facets.append((rear_root, typemask))
        for sub in _submasks(typemask):
            front_verts.add(front_root | sub)
            rear_verts.add(rear_root | sub)
    front = SetSystem.from_masks(n, front_verts)
    rear = SetSystem.from_masks(n, rear_verts)
    rim = SetSystem.from_masks(n, front_verts & rear_verts)
    return ZonotopeSides(
        n=n,
        d=d,
        front_facets=tuple(sorted(front_facets, key=lambda f: (f[1], f[0]))),
        rear_facets=tuple(sorted(rear_facets, key=lambda f: (f[1], f[0]))),
        front=front,
        rear=rear,
        rim=rim,
    )


def _submasks(mask: int):
    """All submasks of a mask, including 0 and the mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
