"""Distance-t balls, two ways, plus the t-prefix counting machinery.

`ball_bfs` is the ground truth: plain breadth-first search over the
undirected shift adjacency.  `ball_closed_form` rebuilds the same set from
wildcard patterns, using the structure of shortest paths in B(d, n): every
shortest path can be arranged as at most three runs of same-direction
shifts, forward-backward-forward (FBF) or backward-forward-backward (BFB),
where "forward" prepends a free symbol (toward directed in-neighbors) and
"backward" appends one.  A run triple with middle run b and outer runs f, g
reaches exactly the pattern

    FBF (f, b, g):  [d]^g + x_{b-f+1} ... x_{n-f} + [d]^{b-g}
    BFB (b, f, c):  [d]^{f-c} + x_{b+1} ... x_{n-f+b} + [d]^c

provided the middle run is at least as long as each outer run.  Note the
dominance is non-strict: run triples with equal middle and outer lengths
(e.g. one backward then one forward shift, which rewrites the first symbol)
reach vertices that no strictly-dominant triple covers, so they must be
enumerated too or the union comes up short of the true ball.

Pattern expansions overlap heavily; everything accumulates into one bitset
because B_t(x) is a set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameters, NotApplicable
from .graph import DeBruijnGraph
from .strings import DBString, decode, encode
from .vertexset import VertexSet

FBF = "FBF"
BFB = "BFB"


@dataclass(frozen=True)
class PathParams:
    """Run lengths of a three-run shift walk, in execution order.

    For kind FBF the runs are (f, b, g): f forward, b backward, g forward.
    For kind BFB they are (b, f, c): b backward, f forward, c backward.
    The middle run must be >= 1, at least as long as each outer run, and the
    total must not exceed the radius t recorded alongside.
    """

    kind: str
    runs: tuple[int, int, int]
    t: int

    def __post_init__(self):
        if self.kind not in (FBF, BFB):
            raise InvalidParameters(f"unknown path kind {self.kind!r}")
        first, middle, last = self.runs
        if min(self.runs) < 0 or middle < 1:
            raise InvalidParameters("run lengths must be >= 0 with middle >= 1",
                                    runs=self.runs)
        if middle < first or middle < last:
            raise InvalidParameters("middle run must dominate both outer runs",
                                    runs=self.runs)
        if sum(self.runs) > self.t:
            raise InvalidParameters("total run length exceeds radius",
                                    runs=self.runs, t=self.t)


@dataclass(frozen=True)
class Pattern:
    """The vertex set [d]^a + mid + [d]^b, with a + |mid| + b = n."""

    d: int
    prefix_wildcards: int
    mid: DBString
    suffix_wildcards: int

    def __post_init__(self):
        if self.mid.d != self.d:
            raise InvalidParameters("pattern middle uses a different alphabet",
                                    d=self.d, mid_d=self.mid.d)
        if self.prefix_wildcards < 0 or self.suffix_wildcards < 0:
            raise InvalidParameters("wildcard counts must be >= 0")

    @property
    def n(self) -> int:
        return self.prefix_wildcards + self.mid.n + self.suffix_wildcards

    @property
    def count(self) -> int:
        """Number of strings denoted: d^(a+b)."""
        return self.d ** (self.prefix_wildcards + self.suffix_wildcards)

    def expand(self) -> VertexSet:
        """Bitmask of all vertex ids matching the pattern."""
        d = self.d
        mid_val = encode(self.mid)
        suffix_count = d ** self.suffix_wildcards
        prefix_count = d ** self.prefix_wildcards
        block_base = mid_val * suffix_count
        stride = d ** (self.mid.n + self.suffix_wildcards)
        # One contiguous run of suffix_count bits per prefix choice.
        run = (1 << suffix_count) - 1
        mask = 0
        for hi in range(prefix_count):
            mask |= run << (hi * stride + block_base)
        return mask

    def __str__(self) -> str:
        if self.d <= 10:
            return ("*" * self.prefix_wildcards + str(self.mid)
                    + "*" * self.suffix_wildcards)
        parts = (["*"] * self.prefix_wildcards
                 + [str(x) for x in self.mid.digits]
                 + ["*"] * self.suffix_wildcards)
        return "[" + ",".join(parts) + "]"


def enumerate_path_params(t: int) -> list[PathParams]:
    """All FBF and BFB run triples of total length <= t.

    Deterministic order: all FBF triples first, then BFB, each block in
    lexicographic order of the run tuple.  Empty for t = 0 (no moves).
    """
    if t < 0:
        raise InvalidParameters("radius must be >= 0", t=t)
    out = []
    for kind in (FBF, BFB):
        for first in range(t + 1):
            for middle in range(1, t + 1):
                for last in range(t + 1):
                    if (middle >= first and middle >= last
                            and first + middle + last <= t):
                        out.append(PathParams(kind, (first, middle, last), t))
    return out


def pattern_for(x: DBString, p: PathParams) -> Pattern:
    """The pattern reached from x by the walk p, per the run-triple algebra.

    Raises NotApplicable when the middle segment length would be negative,
    which happens only when the middle run exceeds n (possible when t > n).
    """
    n = x.n
    if p.kind == FBF:
        f, b, g = p.runs
        if n - b < 0:
            raise NotApplicable(
                f"FBF runs {p.runs} leave no middle segment for n={n}"
            )
        mid = DBString(x.d, x.digits[b - f:n - f])
        return Pattern(x.d, g, mid, b - g)
    b, f, c = p.runs
    if n - f < 0:
        raise NotApplicable(
            f"BFB runs {p.runs} leave no middle segment for n={n}"
        )
    mid = DBString(x.d, x.digits[b:n - f + b])
    return Pattern(x.d, f - c, mid, c)


def ball_bfs(g: DeBruijnGraph, x: int, t: int) -> VertexSet:
    """B_t(x) by frontier expansion; includes x itself."""
    if t < 0:
        raise InvalidParameters("radius must be >= 0", t=t)
    g._check_vertex(x)
    visited = 1 << x
    frontier = [x]
    for _ in range(t):
        nxt = []
        for v in frontier:
            for w in g.neighbor_ids(v):
                if not (visited >> w) & 1:
                    visited |= 1 << w
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return visited


def ball_closed_form(x: DBString, t: int) -> VertexSet:
    """B_t(x) as {x} union all pattern expansions; must equal ball_bfs."""
    if t < 0:
        raise InvalidParameters("radius must be >= 0", t=t)
    mask = 1 << encode(x)
    for p in enumerate_path_params(t):
        mask |= pattern_for(x, p).expand()
    return mask


def all_balls(g: DeBruijnGraph, t: int) -> list[VertexSet]:
    """B_t(v) for every vertex v, indexed by id."""
    return [ball_bfs(g, v, t) for v in range(g.vertex_count)]


@dataclass(frozen=True)
class PrefixBoundBreakdown:
    """Upper bound on distinct t-prefixes in B_t(x) minus the forward set.

    `center` counts the string's own prefix (always 1); `right_shifted`
    counts prefix shapes produced by backward-dominant (FBF) walks, whose
    last fixed letter sits at positions t+1..2t of x; `left_shifted` counts
    shapes from forward-dominant (BFB) walks, anchored at positions < t.
    """

    d: int
    t: int
    center: int
    right_shifted: int
    left_shifted: int
    total: int

    def __post_init__(self):
        if self.center + self.right_shifted + self.left_shifted != self.total:
            raise InvalidParameters("breakdown does not sum to total")


def prefix_bound(d: int, t: int) -> PrefixBoundBreakdown:
    """Case-by-case prefix-diversity bound and its closed-form total.

    total = 1 - d^floor(t/2) + 2 * sum_{j=0}^{t-1} d^j, split by the last
    anchored letter of the prefix shape, with separate odd/even subformulas.
    All arithmetic is exact integer.
    """
    if d < 2:
        raise InvalidParameters("alphabet size must satisfy d >= 2", d=d)
    if t < 1:
        raise InvalidParameters("radius must be >= 1", t=t)
    if t % 2:
        right = d ** ((t - 1) // 2) + 2 * sum(d ** j for j in range((t - 1) // 2))
        left = 2 * sum(d ** j for j in range((t + 1) // 2, t))
    else:
        right = 2 * sum(d ** j for j in range(t // 2))
        left = d ** (t // 2) + 2 * sum(d ** j for j in range(t // 2 + 1, t))
    total = 1 - d ** (t // 2) + 2 * sum(d ** j for j in range(t))
    return PrefixBoundBreakdown(d=d, t=t, center=1, right_shifted=right,
                                left_shifted=left, total=total)


def prefix_margin(d: int, t: int) -> int:
    """d^t + d^floor(t/2) - 2 * sum_{j=0}^{t-1} d^j, exactly.

    This is d^t minus (prefix_bound total - 1): how many of the d^t possible
    t-prefixes are guaranteed NOT to occur in B_t(x) outside the forward
    set, once the center prefix is discounted.  Positive margin means a free
    prefix always exists; it goes negative for d = 2 at t = 4.
    """
    if d < 2:
        raise InvalidParameters("alphabet size must satisfy d >= 2", d=d)
    if t < 1:
        raise InvalidParameters("radius must be >= 1", t=t)
    return d ** t + d ** (t // 2) - 2 * sum(d ** j for j in range(t))


def prefix_set(x: DBString, t: int) -> set[DBString]:
    """Distinct t-prefixes of B_t(x) minus the set [d]^t + x1 ... x_(n-t).

    The subtracted set is everything reachable by t forward shifts; within
    it all d^t prefixes occur trivially, so only the remainder is
    informative.  Requires n >= 2t >= 2.
    """
    n = x.n
    if t < 1 or n < 2 * t:
        raise InvalidParameters("prefix_set requires n >= 2t >= 2", n=n, t=t)
    g = DeBruijnGraph(x.d, n)
    ball = ball_bfs(g, encode(x), t)
    suffix_base = x.d ** (n - t)
    kept_suffix = encode(x) // (x.d ** t)  # x1 ... x_(n-t) as an integer
    prefixes = set()
    mask = ball
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        if v % suffix_base != kept_suffix:
            prefixes.add(decode(v // suffix_base, x.d, t))
    return prefixes
