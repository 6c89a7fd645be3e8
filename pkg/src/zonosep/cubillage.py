"""Cubes, cubillages, precedence, bead threads, and cube-level membranes.

A *cube* (X | T) consists of a root X and a type T, disjoint subsets
of [n] with |T| = d; its vertices are the sets X + A over A inside T.
Writing T = {p_1 < ... < p_d}, the 2d facets are

    F_i = (X | T - p_i)       and      G_i = (X + p_i | T - p_i),

and the facet is a *front* facet of the cube when d - i is even (for
F_i) resp. odd (for G_i), otherwise a *rear* facet.  The two inner
vertices are t_C = X + {p_i : d - i odd} (on every front facet) and
h_C = X + {p_i : d - i even} (on every rear facet).

A *cubillage* of Z(n, d) is a complete set of C(n, d) cubes, one per
type, that fits together facet to facet: every facet shared by two
cubes occurs once as a front and once as a rear facet, and every
unshared facet is a genuine boundary facet of the zonotope.  The
validator here checks exactly that, plus the separation property of
the vertex set: it is strongly (d-1)-separated of size s(n, d-1).

The *standard* cubillage is cut out by exact normals one dimension up:
for each type T, the normal of span{xi_t : t in T} inside the
(d+1)-dimensional configuration, oriented with negative last
coordinate, has a positive side, and the generators outside T on that
side form the root.  The *anti-standard* cubillage takes the opposite
orientation.

Cubes are partially ordered by shared facets (rear facet of one equals
front facet of the next); this precedence is acyclic both on any
single cubillage and on the set of all cubes on [n].  On top of it
live the *bead threads* (arcs t_C -> h_C chained into paths across the
cubillage) and the cube-level membranes: order ideals of the cube
precedence, realized as facet sets obtained from the front boundary by
replaying one cube flip per ideal element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .geometry import _dot, normal_vector, veronese, zonotope_sides
from .ground import check_ground, check_mask, elements, mask_of, set_notation
from .posets import digraph_dot, is_acyclic, scan_ideals
from .separation import is_strongly_r_separated
from .systems import SCHEMA, SetSystem, s_formula

FRONT = "front"
REAR = "rear"


@dataclass(frozen=True)
class Cube:
    """A d-cube (root | type): root and type are disjoint subset masks."""

    root: int
    type: int

    def __post_init__(self) -> None:
        if self.root & self.type:
            raise ValueError(
                f"root {set_notation(self.root)} meets type {set_notation(self.type)}"
            )
        if self.type == 0:
            raise ValueError("cube type must be nonempty")

    @property
    def d(self) -> int:
        return self.type.bit_count()

    def label(self) -> str:
        return f"{set_notation(self.root)}|{set_notation(self.type)}"

    def to_json(self) -> dict:
        return {"root": elements(self.root), "type": elements(self.type)}


@dataclass(frozen=True)
class FacetDescriptor:
    """A (d-1)-dimensional facet (root | type) of a cube or of the boundary."""

    root: int
    type: int

    def vertex_masks(self) -> list[int]:
        return [self.root | sub for sub in _submasks(self.type)]

    def label(self) -> str:
        return f"{set_notation(self.root)}|{set_notation(self.type)}"


def _submasks(mask: int) -> list[int]:
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            return out
        sub = (sub - 1) & mask


def cube_vertices(cube: Cube, n: int) -> SetSystem:
    """The 2^d vertex sets of a cube as a SetSystem over [n]."""
    return SetSystem.from_masks(n, (cube.root | sub for sub in _submasks(cube.type)))


def apex_vertices(cube: Cube) -> tuple[int, int]:
    """(t_C, h_C): the inner vertex on the front side and on the rear side."""
    order = elements(cube.type)
    d = len(order)
    front_inner = cube.root
    rear_inner = cube.root
    for i, p in enumerate(order, start=1):
        if (d - i) % 2:
            front_inner |= 1 << (p - 1)
        else:
            rear_inner |= 1 << (p - 1)
    return front_inner, rear_inner


def cube_facets(cube: Cube) -> list[tuple[FacetDescriptor, str]]:
    """All 2d facets with their side, in a fixed order (F_1..F_d, G_1..G_d)."""
    order = elements(cube.type)
    d = len(order)
    out: list[tuple[FacetDescriptor, str]] = []
    for i, p in enumerate(order, start=1):
        bit = 1 << (p - 1)
        side_f = FRONT if (d - i) % 2 == 0 else REAR
        out.append((FacetDescriptor(cube.root, cube.type & ~bit), side_f))
    for i, p in enumerate(order, start=1):
        bit = 1 << (p - 1)
        side_g = FRONT if (d - i) % 2 else REAR
        out.append((FacetDescriptor(cube.root | bit, cube.type & ~bit), side_g))
    return out


def facet_side(cube: Cube, facet: FacetDescriptor) -> str:
    """FRONT or REAR for a facet of this cube; raises if it is not one."""
    for candidate, side in cube_facets(cube):
        if candidate == facet:
            return side
    raise ValueError(f"{facet.label()} is not a facet of {cube.label()}")


def front_facets(cube: Cube) -> list[FacetDescriptor]:
    return [f for f, side in cube_facets(cube) if side == FRONT]


def rear_facets(cube: Cube) -> list[FacetDescriptor]:
    return [f for f, side in cube_facets(cube) if side == REAR]


@dataclass(frozen=True)
class Cubillage:
    """A complete facet-matching set of cubes tiling Z(n, d)."""

    n: int
    d: int
    cubes: tuple[Cube, ...]

    def __post_init__(self) -> None:
        check_ground(self.n)
        for cube in self.cubes:
            check_mask(cube.root | cube.type, self.n)
            if cube.d != self.d:
                raise ValueError(f"cube {cube.label()} has dimension {cube.d}, not {self.d}")

    @staticmethod
    def from_cubes(n: int, d: int, cubes: Sequence[Cube]) -> "Cubillage":
        ordered = tuple(sorted(cubes, key=lambda c: (c.type, c.root)))
        return Cubillage(n=n, d=d, cubes=ordered)

    def cube_of_type(self, typemask: int) -> Cube:
        for cube in self.cubes:
            if cube.type == typemask:
                return cube
        raise KeyError(f"no cube of type {set_notation(typemask)}")

    def vertex_set(self) -> SetSystem:
        verts: set[int] = set()
        for cube in self.cubes:
            for sub in _submasks(cube.type):
                verts.add(cube.root | sub)
        return SetSystem.from_masks(self.n, verts)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "d": self.d,
            "cubes": [cube.to_json() for cube in self.cubes],
        }

    @staticmethod
    def from_json(blob: dict) -> "Cubillage":
        cubes = [
            Cube(mask_of(c["root"], blob["n"]), mask_of(c["type"], blob["n"]))
            for c in blob["cubes"]
        ]
        return Cubillage.from_cubes(blob["n"], blob["d"], cubes)


def standard_cubillage(n: int, d: int, anti: bool = False) -> Cubillage:
    """Cut the standard (or anti-standard) cubillage of Z(n, d) by normals.

    For each d-element type T, the hyperplane normal through the
    corresponding generators one dimension up is oriented with negative
    (standard) or positive (anti-standard) last coordinate; the root
    collects the remaining generators with positive product against it.
    """
    check_ground(n)
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    if d == n:
        return Cubillage.from_cubes(n, d, [Cube(0, (1 << n) - 1)])
    config = veronese(n, d + 1, validate=False)
    cubes = []
    for combo in combinations(range(1, n + 1), d):
        typemask = mask_of(combo, n)
        normal = normal_vector(config, typemask)
        if normal[-1] == 0:
            raise ArithmeticError("type normal with zero last coordinate")
        want_positive_last = anti
        if (normal[-1] > 0) != want_positive_last:
            normal = tuple(-x for x in normal)
        root = 0
        for i in range(1, n + 1):
            if typemask >> (i - 1) & 1:
                continue
            value = _dot(normal, config.column(i))
            if value == 0:
                raise ArithmeticError("generator on a cube hyperplane")
            if value > 0:
                root |= 1 << (i - 1)
        cubes.append(Cube(root, typemask))
    return Cubillage.from_cubes(n, d, cubes)


def anti_standard_cubillage(n: int, d: int) -> Cubillage:
    return standard_cubillage(n, d, anti=True)


@dataclass
class ValidationReport:
    """Outcome of validate_cubillage: ok iff problems is empty."""

    n: int
    d: int
    cube_count: int
    vertex_count: int
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "d": self.d,
            "cubes": self.cube_count,
            "vertices": self.vertex_count,
            "ok": self.ok,
            "problems": self.problems,
        }


def _boundary_facet_table(n: int, d: int) -> dict[tuple[int, int], str]:
    """Map (root, type) of each boundary facet of Z(n, d) to its side."""
    sides = zonotope_sides(n, d)
    table: dict[tuple[int, int], str] = {}
    for root, typemask in sides.front_facets:
        table[(root, typemask)] = FRONT
    for root, typemask in sides.rear_facets:
        table[(root, typemask)] = REAR
    return table


def validate_cubillage(q: Cubillage) -> ValidationReport:
    """Completeness, facet matching, boundary consistency, vertex separation."""
    problems: list[str] = []
    n, d = q.n, q.d

    types = [cube.type for cube in q.cubes]
    if len(set(types)) != len(types):
        problems.append("duplicate cube types")
    if len(types) != comb(n, d):
        problems.append(f"expected {comb(n, d)} cubes, found {len(types)}")
    if any(t.bit_count() != d for t in types):
        problems.append("cube of wrong dimension")

    # facet matching: count (facet, side) incidences over all cubes
    incidence: dict[tuple[int, int], list[str]] = {}
    for cube in q.cubes:
        for facet, side in cube_facets(cube):
            incidence.setdefault((facet.root, facet.type), []).append(side)
    boundary = _boundary_facet_table(n, d)
    for key, side_list in sorted(incidence.items()):
        root, typemask = key
        label = f"{set_notation(root)}|{set_notation(typemask)}"
        if len(side_list) == 2:
            if sorted(side_list) != [FRONT, REAR]:
                problems.append(f"facet {label} shared with equal sides")
            if key in boundary:
                problems.append(f"boundary facet {label} shared by two cubes")
        elif len(side_list) == 1:
            want = boundary.get(key)
            if want is None:
                problems.append(f"internal facet {label} unmatched")
            elif want != side_list[0]:
                problems.append(
                    f"boundary facet {label} on the {want} side used as {side_list[0]}"
                )
        else:
            problems.append(f"facet {label} shared by {len(side_list)} cubes")

    vertices = q.vertex_set()
    expected = s_formula(n, d - 1) if d - 1 < n else 1 << n
    if len(vertices) != expected:
        problems.append(f"vertex count {len(vertices)}, expected {expected}")
    members = vertices.members
    done = False
    for i in range(len(members)):
        if done:
            break
        for j in range(i + 1, len(members)):
            if not is_strongly_r_separated(members[i], members[j], d - 1):
                problems.append(
                    f"vertices {set_notation(members[i])}, {set_notation(members[j])} "
                    f"not strongly {d - 1}-separated"
                )
                done = True
                break

    return ValidationReport(
        n=n,
        d=d,
        cube_count=len(q.cubes),
        vertex_count=len(vertices),
        problems=problems,
    )


def cubillage_from_collection(collection: SetSystem, d: int) -> Cubillage:
    """Reconstruct a cubillage from the vertex set of one.

    Rule: (X | T) is a cube exactly when all 2^d sets X + A, A inside
    T, belong to the collection.  The result is validated; a collection
    that is not the vertex set of a cubillage raises.
    """
    n = collection.n
    have = collection.member_set()
    cubes = []
    for combo in combinations(range(1, n + 1), d):
        typemask = mask_of(combo, n)
        for root in have:
            if root & typemask:
                continue
            if all(root | sub in have for sub in _submasks(typemask)):
                cubes.append(Cube(root, typemask))
    q = Cubillage.from_cubes(n, d, cubes)
    report = validate_cubillage(q)
    if not report.ok:
        raise ValueError(
            "collection is not the vertex set of a cubillage: "
            + "; ".join(report.problems)
        )
    return q


def all_cubes(n: int, d: int) -> list[Cube]:
    """Every cube (X | T) on [n] with |T| = d, in canonical order."""
    check_ground(n)
    cubes = []
    for combo in combinations(range(1, n + 1), d):
        typemask = mask_of(combo, n)
        rest = ((1 << n) - 1) & ~typemask
        for root in sorted(_submasks(rest)):
            cubes.append(Cube(root, typemask))
    return sorted(cubes, key=lambda c: (c.type, c.root))


def immediately_precedes(first: Cube, second: Cube) -> bool:
    """Some rear facet of the first cube is a front facet of the second."""
    rear = {(f.root, f.type) for f in rear_facets(first)}
    return any((f.root, f.type) in rear for f in front_facets(second))


def precedence_digraph(cubes: Sequence[Cube]) -> list[list[int]]:
    """Successor lists of the shared-facet precedence on the given cubes.

    Arcs are found by indexing facets, so the cost is linear in the
    number of cube facets.
    """
    front_index: dict[tuple[int, int], list[int]] = {}
    for idx, cube in enumerate(cubes):
        for facet in front_facets(cube):
            front_index.setdefault((facet.root, facet.type), []).append(idx)
    succs: list[list[int]] = [[] for _ in cubes]
    for idx, cube in enumerate(cubes):
        seen: set[int] = set()
        for facet in rear_facets(cube):
            for succ in front_index.get((facet.root, facet.type), ()):
                if succ != idx and succ not in seen:
                    seen.add(succ)
                    succs[idx].append(succ)
        succs[idx].sort()
    return succs


def gamma_graph(n: int, d: int) -> tuple[list[Cube], list[list[int]]]:
    """The precedence digraph on all of C(n, d) (every cube on [n])."""
    cubes = all_cubes(n, d)
    return cubes, precedence_digraph(cubes)


def gamma_is_acyclic(n: int, d: int) -> bool:
    cubes, succs = gamma_graph(n, d)
    return is_acyclic(len(cubes), succs)


def precedence_dot(
    cubes: Sequence[Cube], succs: Sequence[Sequence[int]], name: str = "gamma"
) -> str:
    return digraph_dot([cube.label() for cube in cubes], succs, name)


@dataclass
class BeadThreads:
    """Bead-thread structure of a cubillage: arcs t_C -> h_C chained into paths."""

    n: int
    d: int
    arcs: list[tuple[int, int]]
    threads: list[list[int]]  # vertex paths with at least one arc
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_dot(self) -> str:
        lines = ["digraph beads {"]
        for tail, head in self.arcs:
            lines.append(
                f'  "{set_notation(tail)}" -> "{set_notation(head)}";'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def bead_thread_graph(q: Cubillage) -> BeadThreads:
    """Arcs t_C -> h_C of all cubes, with the structural checks applied.

    Checks: in/out-degree at most one, so arcs chain into simple paths;
    thread starts are exactly the inner front vertices (front minus
    rim), thread ends exactly the inner rear vertices; heights strictly
    increase along arcs for odd d and stay constant for even d.
    """
    problems: list[str] = []
    arcs = []
    out_map: dict[int, int] = {}
    in_map: dict[int, int] = {}
    for cube in q.cubes:
        tail, head = apex_vertices(cube)
        arcs.append((tail, head))
        if tail in out_map:
            problems.append(f"vertex {set_notation(tail)} has out-degree 2")
        if head in in_map:
            problems.append(f"vertex {set_notation(head)} has in-degree 2")
        out_map[tail] = head
        in_map[head] = tail
        gap = head.bit_count() - tail.bit_count()
        if q.d % 2 and gap != 1:
            problems.append(f"arc at cube {cube.label()} changes height by {gap}")
        if q.d % 2 == 0 and gap != 0:
            problems.append(f"arc at cube {cube.label()} changes height by {gap}")

    starts = [v for v in sorted(out_map) if v not in in_map]
    threads = []
    for start in starts:
        path = [start]
        while path[-1] in out_map:
            nxt = out_map[path[-1]]
            if nxt in path:
                problems.append(f"thread cycle through {set_notation(nxt)}")
                break
            path.append(nxt)
        threads.append(path)

    sides = zonotope_sides(q.n, q.d)
    inner_front = set(sides.front.members) - set(sides.rim.members)
    inner_rear = set(sides.rear.members) - set(sides.rim.members)
    if set(starts) != inner_front:
        problems.append("thread starts differ from the inner front vertices")
    ends = {path[-1] for path in threads}
    if ends != inner_rear:
        problems.append("thread ends differ from the inner rear vertices")
    covered = {v for path in threads for v in path}
    if covered != set(out_map) | set(in_map):
        problems.append("threads do not cover all arc vertices")

    return BeadThreads(n=q.n, d=q.d, arcs=arcs, threads=threads, problems=problems)


@dataclass(frozen=True)
class SMembrane:
    """A cube-level membrane: an ideal of the cube precedence of one cubillage,
    realized as the facet set swept from the front boundary."""

    n: int
    d: int
    ideal: tuple[Cube, ...]
    facets: frozenset[tuple[int, int]]

    def vertex_set(self) -> SetSystem:
        verts: set[int] = set()
        for root, typemask in self.facets:
            for sub in _submasks(typemask):
                verts.add(root | sub)
        return SetSystem.from_masks(self.n, verts)


def s_membranes(q: Cubillage, cap: int | None = None) -> Iterator[SMembrane]:
    """All cube-level membranes of a cubillage, one per precedence ideal.

    Starts from the front boundary facets of Z(n, d); including a cube
    removes its front facets and adds its rear facets, with both
    replacements asserted to be legal at that point.
    """
    succs = precedence_digraph(q.cubes)
    sides = zonotope_sides(q.n, q.d)
    state: set[tuple[int, int]] = set(sides.front_facets)

    snapshots: list[SMembrane] = []

    def enter(idx: int) -> None:
        cube = q.cubes[idx]
        front = {(f.root, f.type) for f in front_facets(cube)}
        rear = {(f.root, f.type) for f in rear_facets(cube)}
        if not front <= state:
            raise AssertionError(f"cube {cube.label()} raised before its front facets")
        if rear & state:
            raise AssertionError(f"cube {cube.label()} rear facets already present")
        state.difference_update(front)
        state.update(rear)

    def leave(idx: int) -> None:
        cube = q.cubes[idx]
        front = {(f.root, f.type) for f in front_facets(cube)}
        rear = {(f.root, f.type) for f in rear_facets(cube)}
        state.difference_update(rear)
        state.update(front)

    def visit(ideal_indices: tuple[int, ...]) -> None:
        snapshots.append(
            SMembrane(
                n=q.n,
                d=q.d,
                ideal=tuple(q.cubes[i] for i in ideal_indices),
                facets=frozenset(state),
            )
        )

    # scan_ideals drives enter/leave; snapshots are collected eagerly so the
    # mutable state never escapes
    scan_ideals(len(q.cubes), succs, visit=visit, enter=enter, leave=leave, cap=cap)
    return iter(snapshots)
