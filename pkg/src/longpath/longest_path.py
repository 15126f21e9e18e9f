"""Exact longest-path computation by dynamic programming over vertex subsets.

For every subset S of vertices, ``end(S)`` is the set of vertices at which
some simple path visiting exactly S can end.  The recurrence is

    end({v}) = {v}
    v in end(S)  iff  end(S \\ {v}) intersects the neighborhood of v

which costs O(2^n * n) bitmask operations and is the performance core of
the exhaustive sweeps.  Lengths are edge counts externally; internally the
profile stores the vertex count (order) of a longest path.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import SmallGraph, VertexSet, bits


class NoPathError(ValueError):
    """No simple path visits exactly the requested vertex set."""


class NotOnPathError(ValueError):
    """Vertex is not on the path."""


@dataclass(frozen=True)
class PathSeq:
    """A simple path as an ordered vertex sequence, validated on creation."""

    graph: SmallGraph = field(repr=False)
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if not vs:
            raise ValueError("a path has at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex in path")
        for u, v in zip(vs, vs[1:]):
            if not self.graph.has_edge(u, v):
                raise ValueError(f"consecutive vertices {u}, {v} not adjacent")

    @property
    def length(self) -> int:
        """Edge count; one less than the vertex count."""
        return len(self.vertices) - 1

    def vertex_set(self) -> VertexSet:
        return self.graph.vertex_set(self.vertices)

    def distance(self, u: int, v: int) -> int:
        """Edge count between u and v along this path."""
        try:
            iu = self.vertices.index(u)
            iv = self.vertices.index(v)
        except ValueError as exc:
            raise NotOnPathError(str(exc)) from None
        return abs(iu - iv)


def path_distance(p: PathSeq, u: int, v: int) -> int:
    return p.distance(u, v)


def endpoint_table(g: SmallGraph) -> list[int]:
    """end(S) for every subset S, indexed by subset bitmask."""
    n = g.n
    adj = g.adj
    end = [0] * (1 << n)
    for v in range(n):
        end[1 << v] = 1 << v
    for s in range(1, 1 << n):
        if not s & (s - 1):
            continue  # singleton, already seeded
        e = 0
        t = s
        while t:
            b = t & -t
            t ^= b
            if end[s ^ b] & adj[b.bit_length() - 1]:
                e |= b
        end[s] = e
    return end


@dataclass(frozen=True)
class LongestPathProfile:
    """Order of a longest path and all vertex sets achieving it.

    ``sets`` holds subset bitmasks, duplicate-free and sorted numerically
    so profiles compare deterministically.
    """

    graph: SmallGraph = field(repr=False)
    order: int
    sets: tuple[int, ...]

    @property
    def length(self) -> int:
        """Edge count of a longest path."""
        return self.order - 1

    def vertex_sets(self) -> list[VertexSet]:
        return [VertexSet(s, self.graph.n) for s in self.sets]


def longest_path_profile(g: SmallGraph) -> LongestPathProfile:
    end = endpoint_table(g)
    full = g.full_mask()
    if end[full]:
        return LongestPathProfile(g, g.n, (full,))
    best = 0
    sets: list[int] = []
    for s in range(1, full + 1):
        if not end[s]:
            continue
        size = s.bit_count()
        if size > best:
            best = size
            sets = [s]
        elif size == best:
            sets.append(s)
    return LongestPathProfile(g, best, tuple(sets))


def hamiltonian_path_exists(g: SmallGraph) -> bool:
    return longest_path_profile(g).order == g.n


def reconstruct_path(g: SmallGraph, s) -> PathSeq:
    """A concrete path visiting exactly ``s``.

    Deterministic: always extends from the lowest-index valid endpoint.
    """
    sm = s.mask if isinstance(s, VertexSet) else int(s)
    end = endpoint_table(g)
    if not end[sm]:
        raise NoPathError(f"no simple path spans subset {sm:#x}")
    seq = []
    cur = sm
    allowed = end[cur]
    while cur:
        v = next(bits(allowed))
        seq.append(v)
        cur ^= 1 << v
        allowed = end[cur] & g.adj[v]
    return PathSeq(g, tuple(reversed(seq)))
