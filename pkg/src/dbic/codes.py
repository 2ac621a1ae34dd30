"""Twin detection, identifiability, code verification, and code search.

A code S works iff (1) every ball B_t(x) meets S and (2) no two identifying
sets B_t(x) & S coincide.  Twins (vertices with identical balls) are the
sole obstruction to existence.  Both search routines run on the hitting-set
reformulation: S is valid iff it intersects every ball and every symmetric
difference of balls of non-twin pairs within distance 2t; pairs farther
apart are separated for free by their own centers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balls import all_balls, ball_bfs
from .errors import CodeVertexOutOfRange, InfeasibleNoCode, InvalidParameters
from .graph import DeBruijnGraph
from .vertexset import VertexSet, bits, popcount

DEFAULT_EXACT_CAP = 64
DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class TwinPair:
    """Distinct vertices x < y with B_t(x) = B_t(y)."""

    x: int
    y: int
    t: int


@dataclass(frozen=True)
class CodeReport:
    """Outcome of verifying one candidate code."""

    valid: bool
    domination_failures: list[int]          # vertices with empty identifying set
    collisions: list[tuple[int, int]]       # pairs with equal identifying sets
    code_size: int

    def to_json(self, g: DeBruijnGraph) -> dict:
        return {
            "valid": self.valid,
            "code_size": self.code_size,
            "domination_failures": [g.vertex_string(v)
                                    for v in self.domination_failures],
            "collisions": [[g.vertex_string(x), g.vertex_string(y)]
                           for x, y in self.collisions],
        }


@dataclass(frozen=True)
class SeparationConstraint:
    """A vertex set the code must intersect.

    kind "domination": target is B_t(x) for vertices (x,).
    kind "separation": target is B_t(x) ^ B_t(y) for vertices (x, y).
    """

    kind: str
    vertices: tuple[int, ...]
    target: VertexSet


@dataclass(frozen=True)
class MinCodeResult:
    code: VertexSet
    size: int
    optimal: bool
    nodes: int


def _check_t(t: int) -> None:
    if t < 1:
        raise InvalidParameters("radius must satisfy t >= 1", t=t)


def find_twins(g: DeBruijnGraph, t: int) -> list[TwinPair]:
    """All unordered twin pairs; empty iff the graph is t-identifiable.

    Balls are grouped by their bitset value, so each pair comparison is an
    expected O(1) hash lookup rather than a quadratic scan.
    """
    _check_t(t)
    groups: dict[VertexSet, list[int]] = {}
    for v, b in enumerate(all_balls(g, t)):
        groups.setdefault(b, []).append(v)
    pairs = []
    for members in groups.values():
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                pairs.append(TwinPair(x=x, y=y, t=t))
    pairs.sort(key=lambda p: (p.x, p.y))
    return pairs


def is_identifiable(g: DeBruijnGraph, t: int) -> tuple[bool, TwinPair | None]:
    """True iff no twins; on False the lexicographically first pair."""
    twins = find_twins(g, t)
    if twins:
        return False, twins[0]
    return True, None


def verify_code(g: DeBruijnGraph, code: VertexSet, t: int) -> CodeReport:
    """Check both code conditions exhaustively and report all witnesses."""
    _check_t(t)
    if code >> g.vertex_count:
        bad = next(bits(code >> g.vertex_count)) + g.vertex_count
        raise CodeVertexOutOfRange(bad, g.vertex_count)
    balls = all_balls(g, t)
    failures = []
    seen: dict[VertexSet, list[int]] = {}
    for v in range(g.vertex_count):
        ident = balls[v] & code
        if not ident:
            failures.append(v)
        seen.setdefault(ident, []).append(v)
    collisions = []
    for members in seen.values():
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                collisions.append((x, y))
    collisions.sort()
    return CodeReport(
        valid=not failures and not collisions,
        domination_failures=failures,
        collisions=collisions,
        code_size=popcount(code),
    )


def build_constraints(g: DeBruijnGraph, t: int) -> list[SeparationConstraint]:
    """Hitting-set constraints whose solutions are exactly the valid codes.

    One domination constraint per vertex, one separation constraint per
    pair at distance <= 2t (farther pairs have disjoint balls, so any
    dominating set separates them already).  Constraints with identical
    targets are merged, keeping the first.
    """
    _check_t(t)
    twins = find_twins(g, t)
    if twins:
        raise InfeasibleNoCode(twins)
    balls = all_balls(g, t)
    out = []
    seen_targets = set()
    for v in range(g.vertex_count):
        target = balls[v]
        if target not in seen_targets:
            seen_targets.add(target)
            out.append(SeparationConstraint("domination", (v,), target))
    for x in range(g.vertex_count):
        reach = ball_bfs(g, x, 2 * t)
        for y in bits(reach):
            if y <= x:
                continue
            target = balls[x] ^ balls[y]
            if target not in seen_targets:
                seen_targets.add(target)
                out.append(SeparationConstraint("separation", (x, y), target))
    return out


def greedy_code(g: DeBruijnGraph, t: int) -> VertexSet:
    """A valid code by repeatedly taking the vertex hitting the most
    unsatisfied constraints; ties broken by smallest id."""
    unsatisfied = [c.target for c in build_constraints(g, t)]
    chosen = 0
    while unsatisfied:
        counts = [0] * g.vertex_count
        for target in unsatisfied:
            for v in bits(target):
                counts[v] += 1
        best = max(range(g.vertex_count), key=lambda v: (counts[v], -v))
        chosen |= 1 << best
        unsatisfied = [m for m in unsatisfied if not (m >> best) & 1]
    return chosen


def _packing_bound(targets: list[VertexSet]) -> int:
    """Count of pairwise-disjoint targets: each needs its own code vertex."""
    used = 0
    count = 0
    for m in sorted(targets, key=popcount):
        if not m & used:
            used |= m
            count += 1
    return count


def min_code(g: DeBruijnGraph, t: int, node_budget: int | None = None,
             exact_cap: int = DEFAULT_EXACT_CAP) -> MinCodeResult:
    """Smallest code by branch and bound over the hitting-set constraints.

    The greedy code seeds the incumbent; the lower bound is a maximal
    family of pairwise-disjoint unsatisfied targets; branching picks the
    unsatisfied constraint with the smallest target and tries each of its
    vertices in ascending order.  With no explicit budget, graphs up to
    `exact_cap` vertices are solved to proven optimality and larger ones
    get a default node budget; `optimal` reports whether the search
    completed.
    """
    constraints = build_constraints(g, t)
    targets = [c.target for c in constraints]
    if node_budget is None and g.vertex_count > exact_cap:
        node_budget = DEFAULT_NODE_BUDGET

    best = greedy_code(g, t)
    best_size = popcount(best)
    nodes = 0
    aborted = False

    def dfs(chosen: int, size: int, unsatisfied: list[VertexSet]) -> None:
        nonlocal best, best_size, nodes, aborted
        if aborted:
            return
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            aborted = True
            return
        if not unsatisfied:
            if size < best_size:
                best, best_size = chosen, size
            return
        if size + _packing_bound(unsatisfied) >= best_size:
            return
        branch = min(unsatisfied, key=popcount)
        for v in bits(branch):
            if size + 1 >= best_size:
                break
            dfs(chosen | 1 << v, size + 1,
                [m for m in unsatisfied if not (m >> v) & 1])
            if aborted:
                return

    dfs(0, 0, targets)
    return MinCodeResult(code=best, size=best_size,
                         optimal=not aborted, nodes=nodes)


def code_strings(g: DeBruijnGraph, code: VertexSet) -> list[str]:
    """Serialize a code as sorted vertex strings."""
    return [g.vertex_string(v) for v in bits(code)]
