"""Separator predicate and the search for violating longest-path pairs.

A violation is a pair of longest paths with distinct vertex sets whose
intersection is NOT a separator: removing it leaves a nonempty connected
graph.  The main theorem says no such pair exists for connected graphs
with at most 10 vertices; the builtin 11-vertex witness has one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph6 import encode_graph6
from .graphs import EmptySetError, SmallGraph, VertexSet
from .longest_path import LongestPathProfile


@dataclass(frozen=True)
class ViolationRecord:
    """Two longest-path vertex sets whose intersection fails to separate."""

    graph: SmallGraph = field(repr=False)
    set_p: VertexSet
    set_q: VertexSet
    intersection: VertexSet
    ell: int
    complement_components: int  # always 1; that is what makes it a violation

    def to_json_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "graph6": encode_graph6(self.graph),
            "set_p": [v + 1 for v in self.set_p],
            "set_q": [v + 1 for v in self.set_q],
            "ell": self.ell,
        }


def is_separator(g: SmallGraph, w) -> bool:
    """Is the subgraph induced by the complement of ``w`` disconnected?"""
    wm = w.mask if isinstance(w, VertexSet) else int(w)
    comp = g.full_mask() & ~wm
    if comp == 0:
        raise EmptySetError("separator predicate undefined for the full vertex set")
    return not g.is_connected_within(comp)


def _violation(g: SmallGraph, s1: int, s2: int) -> Optional[ViolationRecord]:
    inter = s1 & s2
    comp = g.full_mask() & ~inter
    if comp == 0 or not g.is_connected_within(comp):
        return None
    return ViolationRecord(
        graph=g,
        set_p=VertexSet(s1, g.n),
        set_q=VertexSet(s2, g.n),
        intersection=VertexSet(inter, g.n),
        ell=inter.bit_count(),
        complement_components=1,
    )


def iter_violating_pairs(g: SmallGraph, profile: LongestPathProfile) -> Iterator[ViolationRecord]:
    """All violating pairs, scanned lexicographically over (S1, S2)."""
    sets = profile.sets
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            rec = _violation(g, sets[a], sets[b])
            if rec is not None:
                yield rec


def find_violating_pair(g: SmallGraph, profile: LongestPathProfile) -> Optional[ViolationRecord]:
    """First violating pair in deterministic scan order, or None."""
    if len(profile.sets) < 2:
        return None
    return next(iter_violating_pairs(g, profile), None)


@dataclass
class EllStatistics:
    """Distinct-set pair counts bucketed by intersection cardinality."""

    pair_counts: dict[int, int]
    violating_ells: set[int]

    @property
    def has_violation(self) -> bool:
        return bool(self.violating_ells)


def min_ell_statistics(g: SmallGraph, profile: LongestPathProfile) -> EllStatistics:
    counts: dict[int, int] = {}
    violating: set[int] = set()
    sets = profile.sets
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            ell = (sets[a] & sets[b]).bit_count()
            counts[ell] = counts.get(ell, 0) + 1
            if ell not in violating and _violation(g, sets[a], sets[b]) is not None:
                violating.add(ell)
    return EllStatistics(counts, violating)
