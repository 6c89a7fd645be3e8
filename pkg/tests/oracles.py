"""Independent reference implementations used only by the test suite.

Everything here works on plain Python sets of 1-indexed integers and
follows the raw textual definitions as literally as possible, with no
cortege machinery, so that production code and oracle share no code
path.  Slow is fine; these run at desk scale only.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def alternation_degree(a: set[int], b: set[int]) -> int:
    """Longest alternating subsequence length in the merged difference sequence.

    Scans 1, 2, 3, ... keeping the longest alternating subsequence ending
    on each side; equals the interlacing degree of the pair.
    """
    d1 = a - b
    d2 = b - a
    best1 = best2 = 0  # longest alternating sequence ending in an A- / B-element
    for e in sorted(d1 | d2):
        if e in d1:
            best1 = max(best1, best2 + 1)
        else:
            best2 = max(best2, best1 + 1)
    return max(best1, best2)


def raw_strongly_separated(a: set[int], b: set[int], r: int) -> bool:
    """No alternating chain i_1 < ... < i_{r+2} hopping between A-B and B-A."""
    return alternation_degree(a, b) <= r + 1


def raw_surrounds(a: set[int], b: set[int], n: int) -> bool:
    d1, d2 = a - b, b - a
    mn1 = min(d1) if d1 else n + 1
    mn2 = min(d2) if d2 else n + 1
    mx1 = max(d1) if d1 else 0
    mx2 = max(d2) if d2 else 0
    return mn1 < mn2 and mx1 > mx2


def raw_right_surrounds(a: set[int], b: set[int]) -> bool:
    d1, d2 = a - b, b - a
    mx1 = max(d1) if d1 else 0
    mx2 = max(d2) if d2 else 0
    return mx1 > mx2


def raw_weakly_separated(a: set[int], b: set[int], r: int, n: int) -> bool:
    """Literal weak separation, dispatching on the parity of r."""
    deg = alternation_degree(a, b)
    if deg <= r + 1:
        return True
    if deg != r + 2:
        return False
    if r % 2:
        cond_a = raw_surrounds(a, b, n) and len(a) <= len(b)
        cond_b = raw_surrounds(b, a, n) and len(b) <= len(a)
    else:
        cond_a = raw_right_surrounds(a, b) and len(a) <= len(b)
        cond_b = raw_right_surrounds(b, a) and len(b) <= len(a)
    return cond_a or cond_b


def raw_double_comb(a: set[int], b: set[int], r: int) -> bool:
    return len(a ^ b) == r + 2 and alternation_degree(a, b) == r + 2


def subsets_of(n: int):
    """All subsets of [n] as Python sets, smallest ground elements first."""
    universe = list(range(1, n + 1))
    for k in range(n + 1):
        for combo in combinations(universe, k):
            yield set(combo)


def brute_force_max_system(n: int, compatible) -> int:
    """Maximum pairwise-compatible family size by plain recursion (tiny n only)."""
    all_sets = [frozenset(s) for s in subsets_of(n)]

    def grow(chosen: list[frozenset], rest: list[frozenset]) -> int:
        best = len(chosen)
        for i, cand in enumerate(rest):
            if all(compatible(set(cand), set(c)) for c in chosen):
                best = max(best, grow(chosen + [cand], rest[i + 1 :]))
        return best

    return grow([], all_sets)


def count_ideals_bfs(count: int, succs) -> int:
    """Number of order ideals of a digraph, by plain breadth-first closure.

    Deliberately different machinery from the production depth-first
    reverse search: grows ideals one coverable element at a time and
    dedupes through a seen-set of bitmasks.
    """
    preds = [0] * count
    for i, out in enumerate(succs):
        for j in out:
            preds[j] |= 1 << i
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for state in frontier:
            for e in range(count):
                if state >> e & 1:
                    continue
                if preds[e] & ~state:
                    continue
                grown = state | 1 << e
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return len(seen)


def standard_root(typeset: set[int], n: int, anti: bool = False) -> set[int]:
    """Root of the cube of a given type in the standard cubillage, in closed form.

    A generator i outside T joins the root exactly when the number of
    type elements above i is odd (even for the anti-standard cubillage).
    Derived by tracking the sign of the degree-d polynomial with roots
    at the type parameters, evaluated at the remaining parameters.
    """
    want = 0 if anti else 1
    return {
        i
        for i in range(1, n + 1)
        if i not in typeset and sum(1 for t in typeset if t > i) % 2 == want
    }


def linear_functional_separates(vectors_in, vectors_out) -> bool:
    """Exact rational LP-free feasibility: exists c with c.v > 0 on one side,
    c.v < 0 on the other.  Fourier-Motzkin elimination over Fractions."""
    rows = [tuple(Fraction(x) for x in v) for v in vectors_in]
    rows += [tuple(-Fraction(x) for x in v) for v in vectors_out]
    return _fm_strict_feasible(rows)


def _fm_strict_feasible(rows) -> bool:
    """Feasibility of the homogeneous strict system row . c > 0 for all rows."""
    if not rows:
        return True
    width = len(rows[0])
    if width == 0:
        return False  # a remaining constraint reads 0 > 0
    if any(all(x == 0 for x in row) for row in rows):
        return False
    if width == 1:
        signs = {row[0] > 0 for row in rows}
        return len(signs) == 1
    pos = [r for r in rows if r[-1] > 0]
    neg = [r for r in rows if r[-1] < 0]
    zero = [r[:-1] for r in rows if r[-1] == 0]
    combined = list(zero)
    for p in pos:
        for q in neg:
            # eliminate the last coordinate: (-q_last) * p + p_last * q
            coef_p, coef_q = -q[-1], p[-1]
            combined.append(
                tuple(coef_p * p[i] + coef_q * q[i] for i in range(width - 1))
            )
    seen = set()
    reduced = []
    for row in combined:
        if row not in seen:
            seen.add(row)
            reduced.append(row)
    return _fm_strict_feasible(reduced)
