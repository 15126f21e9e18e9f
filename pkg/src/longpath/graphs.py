"""Small simple graphs stored as per-vertex adjacency bitmasks.

Everything is sized for exhaustive search over graphs with at most 16
vertices: a vertex set fits in one machine integer, and the frequent
operations (union, intersection, membership, flood fill) are bit tricks.
Graphs and vertex sets are immutable values; mutators return new graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 16


class InvalidEdgeError(ValueError):
    """Requested edge is a loop or has an out-of-range endpoint."""


class EmptySetError(ValueError):
    """Operation needs a nonempty vertex set."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """Subset of [0, universe) with exact set semantics on a bitmask."""

    mask: int
    universe: int

    def __post_init__(self) -> None:
        if not 0 <= self.universe <= MAX_VERTICES:
            raise ValueError(f"universe size {self.universe} out of range")
        if not 0 <= self.mask < (1 << self.universe):
            raise ValueError("members outside the universe")

    @classmethod
    def of(cls, vertices: Iterable[int], universe: int) -> "VertexSet":
        return cls(mask_of(vertices), universe)

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask, self.universe)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask, self.universe)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask, self.universe)

    def complement(self) -> "VertexSet":
        full = (1 << self.universe) - 1
        return VertexSet(full ^ self.mask, self.universe)

    def to_list(self) -> list[int]:
        return list(bits(self.mask))


def _as_mask(s) -> int:
    return s.mask if isinstance(s, VertexSet) else int(s)


@dataclass(frozen=True)
class SmallGraph:
    """Simple undirected graph on n <= 16 vertices.

    ``adj[v]`` is the bitmask of neighbors of v.  The symmetry and
    loop-freeness invariants are enforced at construction time.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"order {self.n} out of range [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbors of {v} outside [0, n)")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {{{u}, {v}}}")

    @classmethod
    def empty(cls, n: int) -> "SmallGraph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SmallGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidEdgeError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdgeError(f"edge {{{u}, {v}}} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(vertices, self.n)

    def add_edge(self, u: int, v: int) -> "SmallGraph":
        """New graph with edge {u, v} added; idempotent if already present."""
        if u == v:
            raise InvalidEdgeError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidEdgeError(f"edge {{{u}, {v}}} out of range for n={self.n}")
        if self.has_edge(u, v):
            return self
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return SmallGraph(self.n, tuple(adj))

    def neighbors_of_set(self, a) -> VertexSet:
        """Vertices with at least one neighbor in ``a``.

        May include members of ``a`` itself when ``a`` contains adjacent
        vertices.
        """
        am = _as_mask(a)
        out = 0
        for u in range(self.n):
            if self.adj[u] & am:
                out |= 1 << u
        return VertexSet(out, self.n)

    def is_connected_within(self, s) -> bool:
        """Is the subgraph induced by ``s`` connected?  Flood fill on masks."""
        sm = _as_mask(s)
        if sm == 0:
            raise EmptySetError("connectivity of the empty set is undefined")
        return self._reach(sm) == sm

    def _reach(self, sm: int) -> int:
        adj = self.adj
        reach = sm & -sm
        frontier = reach
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & sm & ~reach
            reach |= frontier
        return reach

    def is_connected(self) -> bool:
        return self.is_connected_within(self.full_mask())

    def induced_subgraph(self, s) -> tuple["SmallGraph", list[int]]:
        """Subgraph induced by ``s``, relabeled to [0, |s|).

        Returns the relabeled graph and the label map: entry i is the
        original vertex now called i.
        """
        sm = _as_mask(s)
        if sm == 0:
            raise EmptySetError("induced subgraph of the empty set")
        labels = list(bits(sm))
        pos = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for i, v in enumerate(labels):
            for u in bits(self.adj[v] & sm):
                adj[i] |= 1 << pos[u]
        return SmallGraph(len(labels), tuple(adj)), labels

    def relabel(self, perm: list[int]) -> "SmallGraph":
        """Image under the permutation sending vertex v to perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            for u in bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return SmallGraph(self.n, tuple(adj))


def _canonical_enc_tail(n: int, adj) -> tuple[int, int]:
    """Canonical encoding of a graph plus its canonical-deletion orbit.

    Maximizes the upper-triangle adjacency bits in column order over all
    vertex orderings, by backtracking with prefix pruning.  Returns the
    maximal encoding and the bitmask of vertices that occupy the last
    canonical position in some optimal ordering (an automorphism orbit,
    used as the canonical-deletion test during generation).
    """
    if n == 1:
        return 0, 1
    total = n * (n - 1) // 2
    best = -1
    tail = 0

    def extend(used: int, enc: int, nbits: int, depth: int, rows) -> None:
        nonlocal best, tail
        cands = sorted(
            ((rows[v], v) for v in range(n) if not used >> v & 1), reverse=True
        )
        last = depth == n - 1
        for b, v in cands:
            enc2 = (enc << depth) | b
            nbits2 = nbits + depth
            if best >= 0 and enc2 < best >> (total - nbits2):
                break  # candidates are sorted, the rest are worse
            if last:
                if enc2 > best:
                    best = enc2
                    tail = 1 << v
                elif enc2 == best:
                    tail |= 1 << v
            else:
                av = adj[v]
                rows2 = [(rows[u] << 1) | (av >> u & 1) for u in range(n)]
                extend(used | 1 << v, enc2, nbits2, depth + 1, rows2)

    extend(0, 0, 0, 0, [0] * n)
    return best, tail


def canonical_form(g: SmallGraph) -> bytes:
    """Isomorphism-invariant encoding: equal forms iff isomorphic graphs."""
    from ._fast import canon_enc_tail

    enc, _ = canon_enc_tail(g.n, g.adj)
    total = g.n * (g.n - 1) // 2
    return bytes([g.n]) + enc.to_bytes((total + 7) // 8, "big")


# Edge-list text format: first line "n m", then m lines "u v" with 1-based
# labels; '#' starts a comment.

def parse_edge_list(text: str) -> SmallGraph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("empty edge list")
    if len(rows[0]) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)}")
        u, v = int(row[0]), int(row[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidEdgeError(f"edge ({u}, {v}) outside 1..{n}")
        edges.append((u - 1, v - 1))
    return SmallGraph.from_edges(n, edges)


def format_edge_list(g: SmallGraph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
