"""The undirected de Bruijn graph B(d, n).

Vertices are the d^n words of length n over [d]; u and v are adjacent iff
one is a single shift of the other (they overlap in n-1 symbols).  Adjacency
is computed on demand from the shift algebra; nothing is stored per vertex.
Self-loops (at the constant words a^n) are stripped from the neighbor
relation, since they never affect distances, balls, or identification, but
they are reported via has_loop() and drawn by the DOT export.
"""

from __future__ import annotations

from typing import Iterator

from .errors import InvalidParameters
from .strings import DBString, decode, max_length
from .vertexset import VertexSet, bits, mask_of

DEFAULT_MAX_VERTICES = 1_000_000


class DeBruijnGraph:
    """Immutable handle on B(d, n); all queries are pure."""

    def __init__(self, d: int, n: int, max_vertices: int = DEFAULT_MAX_VERTICES):
        if d < 2:
            raise InvalidParameters("alphabet size must satisfy d >= 2", d=d, n=n)
        if n < 1:
            raise InvalidParameters("string length must satisfy n >= 1", d=d, n=n)
        if n > max_length(d):
            raise InvalidParameters(
                f"n exceeds the packed-word cap (max n={max_length(d)})", d=d, n=n
            )
        count = d ** n
        if count > max_vertices:
            raise InvalidParameters(
                f"d^n = {count} exceeds the vertex cap {max_vertices}", d=d, n=n
            )
        self.d = d
        self.n = n
        self.vertex_count = count
        self._suffix_base = d ** (n - 1)  # weight of the leading symbol

    def __repr__(self) -> str:
        return f"DeBruijnGraph(d={self.d}, n={self.n})"

    def params(self) -> dict:
        return {"d": self.d, "n": self.n}

    def vertex_string(self, v: int) -> str:
        return str(decode(v, self.d, self.n))

    # -- shift scaffolding (directed edges) --

    def right_shift_ids(self, v: int) -> list[int]:
        """Ids of x2 ... xn a, the directed out-neighbors of v."""
        base = (v % self._suffix_base) * self.d
        return [base + a for a in range(self.d)]

    def left_shift_ids(self, v: int) -> list[int]:
        """Ids of a x1 ... x(n-1), the directed in-neighbors of v."""
        base = v // self.d
        return [base + a * self._suffix_base for a in range(self.d)]

    # -- undirected adjacency --

    def neighbor_ids(self, v: int) -> list[int]:
        """Sorted distinct undirected neighbors of v, excluding v itself."""
        self._check_vertex(v)
        out = set(self.right_shift_ids(v))
        out.update(self.left_shift_ids(v))
        out.discard(v)
        return sorted(out)

    def neighbors(self, v: int) -> VertexSet:
        return mask_of(self.neighbor_ids(v))

    def has_loop(self, v: int) -> bool:
        """True iff the directed construction yields a loop at v (v = a^n)."""
        self._check_vertex(v)
        # a^n encodes to a * (d^n - 1) / (d - 1)
        return v == (v % self.d) * (self.vertex_count - 1) // (self.d - 1)

    def loop_vertices(self) -> list[int]:
        repunit = (self.vertex_count - 1) // (self.d - 1)
        return [a * repunit for a in range(self.d)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected non-loop edge once, as (min id, max id).

        Derived by enumerating the d^(n+1) words of length n+1 (the directed
        edges) and collapsing direction and duplicates; emitted in first-
        encounter order of that enumeration.
        """
        seen = set()
        for w in range(self.vertex_count * self.d):
            u = w // self.d          # first n symbols
            v = w % self.vertex_count  # last n symbols
            if u == v:
                continue
            edge = (u, v) if u < v else (v, u)
            if edge not in seen:
                seen.add(edge)
                yield edge

    def edge_count(self) -> int:
        """Number of undirected non-loop edges, in closed form.

        The d^(n+1) directed edges lose d loops; the only direction pairs
        that collapse are between the two-symbol alternating words (ababab..
        and babab..), one per unordered symbol pair, so
        count = d^(n+1) - d - d(d-1)/2.  Cross-checked against edges() in
        the tests.
        """
        return self.vertex_count * self.d - self.d - self.d * (self.d - 1) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise InvalidParameters(
                "vertex id outside [0, d^n)", id=v, d=self.d, n=self.n
            )


def export_dot(g: DeBruijnGraph, highlight: VertexSet = 0) -> str:
    """DOT text for B(d, n); highlighted vertices are drawn filled.

    Vertex stanzas appear in ascending id order, non-loop edges in canonical
    sorted order, then the self-loops, so output is deterministic.
    """
    if highlight >> g.vertex_count:
        raise InvalidParameters(
            "highlight set contains ids outside the graph",
            d=g.d, n=g.n,
        )
    marked = set(bits(highlight))
    lines = [f"graph debruijn_{g.d}_{g.n} {{", "  node [shape=circle];"]
    for v in range(g.vertex_count):
        label = g.vertex_string(v)
        if v in marked:
            lines.append(
                f'  "{label}" [style=filled, fillcolor=black, fontcolor=white];'
            )
        else:
            lines.append(f'  "{label}";')
    for u, v in sorted(g.edges()):
        lines.append(f'  "{g.vertex_string(u)}" -- "{g.vertex_string(v)}";')
    for v in g.loop_vertices():
        label = g.vertex_string(v)
        lines.append(f'  "{label}" -- "{label}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
