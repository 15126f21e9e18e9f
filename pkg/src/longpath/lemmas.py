"""Mechanical replay of the configuration lemmas behind the tight case.

The configuration under study is a path p_1 ... p_{n-1} together with one
extra vertex q adjacent to p_i (the private vertex of the first path) and
to p_j, p_k (the neighbors of q along the second path), optionally plus a
single candidate edge.  Each lemma claims that a certain candidate edge,
or a certain parameter degeneracy, would create a path through all n
vertices; the replay builds the graph and checks Hamiltonian-path
existence, over every admissible parameter tuple.

Positions i, j, k are 1-based, matching the path labels; vertex p_m is
index m-1 internally and q is index n-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graphs import SmallGraph
from .longest_path import PathSeq, hamiltonian_path_exists

CASE_ORDERS = (8, 9, 10)


class NotAClaimError(ValueError):
    """Requested check is not among the catalogued lemma claims."""


@dataclass(frozen=True)
class CaseConfig:
    """Parameters (n, i, j, k) of a configuration graph, plus candidate edges."""

    n: int
    i: int
    j: int
    k: int
    extra_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        n, i, j, k = self.n, self.i, self.j, self.k
        if not 1 < i < n - 1:
            raise ValueError(f"i={i} must satisfy 1 < i < {n - 1}")
        if not 1 < j < k < n - 1:
            raise ValueError(f"need 1 < j < k < {n - 1}, got j={j}, k={k}")
        if abs(i - j) <= 1 or abs(k - i) <= 1 or abs(k - j) <= 1:
            raise ValueError("positions i, j, k must be pairwise more than 1 apart")
        for a, b in self.extra_edges:
            if not (1 <= a <= n - 1 and 1 <= b <= n - 1) or a == b:
                raise ValueError(f"bad extra edge ({a}, {b})")


def build_config(c: CaseConfig) -> SmallGraph:
    """Path on p_1..p_{n-1}, q adjacent to p_i, p_j, p_k, plus extra edges."""
    n = c.n
    q = n - 1
    edges = [(t, t + 1) for t in range(n - 2)]
    edges += [(q, c.i - 1), (q, c.j - 1), (q, c.k - 1)]
    base = SmallGraph.from_edges(n, edges)
    g = base
    for a, b in c.extra_edges:
        if g.has_edge(a - 1, b - 1):
            raise ValueError(f"extra edge (p_{a}, p_{b}) duplicates an existing edge")
        g = g.add_edge(a - 1, b - 1)
    return g


def admissible_triples(n: int) -> Iterator[tuple[int, int, int]]:
    """All (i, j, k) satisfying the distance constraints for order n."""
    for i in range(2, n - 1):
        for j, k in combinations(range(2, n - 1), 2):
            if abs(i - j) > 1 and abs(k - i) > 1 and abs(k - j) > 1:
                yield (i, j, k)


def forbidden_pair_catalog(n: int, i: int, j: int, k: int) -> list[tuple[int, tuple[int, int]]]:
    """Catalogued (item, pair) claims for the given configuration."""
    pairs: list[tuple[int, tuple[int, int]]] = [
        (1, (i - 1, i + 1)),
        (1, (1, n - 1)),
        (1, (1, i + 1)),
        (1, (i - 1, n - 1)),
    ]
    for x in (j, k):
        pairs += [
            (2, (1, x + 1)),
            (2, (x - 1, n - 1)),
            (2, (i - 1, x - 1)),
            (2, (i + 1, x + 1)),
        ]
        if x > i:
            pairs.append((3, (1, x - 1)))
        if x < i:
            pairs.append((3, (x + 1, n - 1)))
    if j < i:
        pairs.append((4, (1, i - 1)))
    if k > i:
        pairs.append((4, (i + 1, n - 1)))
    return [(item, (min(a, b), max(a, b))) for item, (a, b) in pairs]


def replay_forbidden_pair(c: CaseConfig) -> bool:
    """Check that the candidate edge cannot belong to the second path.

    Two certificate shapes arise.  For the pair (p_{i-1}, p_{i+1}) the
    argument is insertion: any path through that edge gains a vertex by
    routing p_{i-1} p_i p_{i+1} instead, which is valid exactly when p_i
    is adjacent to both endpoints.  Every other catalogued pair is
    certified by a path through all n vertices of the configuration plus
    the candidate edge, contradicting maximality outright.
    """
    if len(c.extra_edges) != 1:
        raise NotAClaimError("exactly one candidate edge is required")
    a, b = c.extra_edges[0]
    pair = (min(a, b), max(a, b))
    catalog = {p for _, p in forbidden_pair_catalog(c.n, c.i, c.j, c.k)}
    if pair not in catalog:
        raise NotAClaimError(
            f"pair (p_{pair[0]}, p_{pair[1]}) is not a catalogued claim for "
            f"(n={c.n}, i={c.i}, j={c.j}, k={c.k})"
        )
    if pair == (c.i - 1, c.i + 1):
        g = build_config(CaseConfig(c.n, c.i, c.j, c.k))
        return g.has_edge(pair[0] - 1, c.i - 1) and g.has_edge(c.i - 1, pair[1] - 1)
    return hamiltonian_path_exists(build_config(c))


def replay_min_distance(n: int, a: int, b: int) -> bool:
    """Adjacent attachment positions would lengthen the path.

    The configuration has q adjacent only to p_a and p_b with |a-b| = 1;
    routing p_a q p_b in place of the path edge gives a Hamiltonian path.
    """
    if not (1 < a < n - 1 and 1 < b < n - 1) or a == b:
        raise NotAClaimError(f"positions must lie strictly inside the path, got {a}, {b}")
    if abs(a - b) != 1:
        raise NotAClaimError("the claim concerns attachment positions at distance 1")
    q = n - 1
    edges = [(t, t + 1) for t in range(n - 2)] + [(q, a - 1), (q, b - 1)]
    return hamiltonian_path_exists(SmallGraph.from_edges(n, edges))


def replay_lollipop(n: int, j: int, k: int) -> bool:
    """Rewiring away from a private vertex at position 2.

    With the private vertex at p_2 and q attached to p_2, p_j, p_k
    (k > 5), the rerouted sequence p_{k-1} ... p_3 p_2 q p_k ... p_{n-1}
    must be a valid path on n-1 vertices whose second vertex avoids both
    position 2 and position n-2.
    """
    if k <= 5:
        raise NotAClaimError("the rewiring argument requires k > 5")
    c = CaseConfig(n, 2, j, k)  # validates the distance constraints
    g = build_config(c)
    seq = list(range(k - 2, 0, -1)) + [n - 1] + list(range(k - 1, n - 1))
    try:
        path = PathSeq(g, tuple(seq))
    except ValueError:
        return False
    second = path.vertices[1]  # p_{k-2} in 0-based form
    return len(path.vertices) == n - 1 and second not in (1, n - 3)


def lollipop_tuples(n: int) -> Iterator[tuple[int, int]]:
    """Admissible (j, k) for the rewiring lemma at order n."""
    for j, k in admissible_triples_i2(n):
        if k > 5:
            yield (j, k)


def admissible_triples_i2(n: int) -> Iterator[tuple[int, int]]:
    for i, j, k in admissible_triples(n):
        if i == 2:
            yield (j, k)


def min_distance_tuples(n: int) -> Iterator[tuple[int, int]]:
    for a in range(2, n - 2):
        yield (a, a + 1)


@dataclass
class LemmaResult:
    family: str
    n: int
    params: tuple
    passed: bool


def run_catalog(
    orders=CASE_ORDERS,
    remark: bool = True,
    lollipop: bool = True,
    forbidden: bool = True,
) -> list[LemmaResult]:
    """Replay every admissible tuple of the selected lemma families."""
    results: list[LemmaResult] = []
    for n in orders:
        if remark:
            for a, b in min_distance_tuples(n):
                results.append(
                    LemmaResult("min-distance", n, (a, b), replay_min_distance(n, a, b))
                )
        if lollipop:
            for j, k in lollipop_tuples(n):
                results.append(
                    LemmaResult("lollipop", n, (j, k), replay_lollipop(n, j, k))
                )
        if forbidden:
            for i, j, k in admissible_triples(n):
                seen = set()
                for item, pair in forbidden_pair_catalog(n, i, j, k):
                    if pair in seen:
                        continue
                    seen.add(pair)
                    ok = replay_forbidden_pair(CaseConfig(n, i, j, k, (pair,)))
                    results.append(
                        LemmaResult("forbidden-pair", n, (i, j, k, item, pair), ok)
                    )
    return results
