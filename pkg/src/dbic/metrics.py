"""Shortest-path distances, eccentricity, radius/diameter, and antipodal
vertex construction on B(d, n).

All-pairs work runs as one single-source BFS per vertex; only the current
distance array is held at a time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidParameters
from .graph import DeBruijnGraph
from .strings import DBString


@dataclass(frozen=True)
class EccentricityReport:
    vertex: int
    eccentricity: int
    witness: int  # smallest id among the farthest vertices


def bfs_distances(g: DeBruijnGraph, source: int) -> list[int]:
    """Distance from source to every vertex (B(d, n) is connected)."""
    g._check_vertex(source)
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g.neighbor_ids(v):
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def distance(g: DeBruijnGraph, x: int, y: int) -> int:
    """Length of the shortest undirected path; 0 iff x = y."""
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y:
        return 0
    seen = 1 << x
    frontier = [x]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for v in frontier:
            for w in g.neighbor_ids(v):
                if w == y:
                    return steps
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    nxt.append(w)
        frontier = nxt
    raise InvalidParameters("graph unexpectedly disconnected", x=x, y=y)


def eccentricity(g: DeBruijnGraph, y: int) -> EccentricityReport:
    dist = bfs_distances(g, y)
    ecc = max(dist)
    witness = dist.index(ecc)
    return EccentricityReport(vertex=y, eccentricity=ecc, witness=witness)


def eccentricity_table(g: DeBruijnGraph) -> list[EccentricityReport]:
    return [eccentricity(g, v) for v in range(g.vertex_count)]


def radius_diameter(g: DeBruijnGraph) -> tuple[int, int]:
    """(min, max) eccentricity over all vertices, via all-pairs BFS."""
    lo = g.vertex_count
    hi = 0
    for v in range(g.vertex_count):
        ecc = max(bfs_distances(g, v))
        lo = min(lo, ecc)
        hi = max(hi, ecc)
    return lo, hi


def construct_antipodal(y: DBString) -> DBString:
    """A vertex at distance exactly n from y, for alphabets with d >= 3.

    Built by induction on n, descending two symbols at a time: strip the
    first and last symbol, recurse, then re-extend with a leading symbol
    avoiding y's last two symbols and a trailing symbol avoiding y's first
    two.  Base cases: n = 1 picks any other symbol; n = 2 returns zz for z
    unused by y; n = 3 returns aaa for an unused a when one exists, else
    (y2)^3.  Free choices always resolve to the smallest valid symbol, so
    the output is deterministic.

    For d = 2 no such vertex need exist (in B(2, 3) nothing is at distance
    3 from 011), so d < 3 is rejected.
    """
    d = y.d
    if d < 3:
        raise InvalidParameters(
            "antipodal construction requires d >= 3", d=d, n=y.n
        )
    digs = y.digits
    n = len(digs)
    if n == 0:
        raise InvalidParameters("vertex must be nonempty", d=d, n=0)
    if n == 1:
        z = min(a for a in range(d) if a != digs[0])
        return DBString(d, (z,))
    if n == 2:
        z = min(a for a in range(d) if a not in digs)
        return DBString(d, (z, z))
    if n == 3:
        unused = [a for a in range(d) if a not in digs]
        a = min(unused) if unused else digs[1]
        return DBString(d, (a, a, a))
    core = construct_antipodal(DBString(d, digs[1:-1]))
    head_choices = [a for a in range(d) if a not in (digs[-2], digs[-1])]
    tail_choices = [a for a in range(d) if a not in (digs[0], digs[1])]
    # Two exclusions against d >= 3 symbols always leave a choice.
    assert head_choices and tail_choices
    return DBString(d, (head_choices[0],) + core.digits + (tail_choices[0],))
