"""Sweep pipeline: enumerate, search for violating pairs, certify, report.

A sweep over all connected graphs of a given order asserts that no pair of
longest paths with distinct vertex sets has a non-separating intersection.
Sweeps are split into shards (fixed per order, independent of worker
count, so reports are byte-reproducible), checkpointed after every shard,
and merged deterministically.
"""
from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from ._fast import scan_distinct_sets
from .generate import (
    CONNECTED_COUNTS,
    GenerationShard,
    enumerate_connected,
    external_source,
)
from .graph6 import decode_graph6, encode_graph6
from .graphs import SmallGraph, VertexSet, bits
from .longest_path import PathSeq, longest_path_profile
from .separators import ViolationRecord, is_separator

# The 11-vertex graph from which the whole question starts: two longest
# paths of length 9 share 9 vertices and the remaining two vertices are
# joined by an edge, so the intersection is not a separator.  Transcribed
# to 0-based labels; check_witness re-derives every claimed property.
WITNESS_EDGES = (
    (0, 1), (1, 2), (1, 4), (2, 3), (2, 7), (3, 5), (3, 8),
    (4, 6), (4, 8), (5, 6), (6, 7), (7, 9), (8, 9), (9, 10),
)


class WitnessFailure(RuntimeError):
    """The witness graph does not exhibit the claimed properties."""


class PreconditionError(ValueError):
    """Operation invoked outside its stated hypotheses."""


class ReductionAssertionError(RuntimeError):
    """A runtime-verified assertion of the tight-case reduction failed."""


class CheckpointError(RuntimeError):
    """Checkpoint file is corrupt or inconsistent with the request."""


def build_witness() -> SmallGraph:
    return SmallGraph.from_edges(11, WITNESS_EDGES)


def check_witness(g: Optional[SmallGraph] = None) -> ViolationRecord:
    """Certify the witness properties; raise WitnessFailure otherwise."""
    if g is None:
        g = build_witness()
    if not g.is_connected():
        raise WitnessFailure("witness candidate is not connected")
    profile = longest_path_profile(g)
    if profile.order != 10:
        raise WitnessFailure(
            f"longest paths have {profile.order} vertices, expected 10 (length 9)"
        )
    sets = profile.sets
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            inter = sets[a] & sets[b]
            if inter.bit_count() != 9:
                continue
            comp = g.full_mask() & ~inter
            if comp.bit_count() == 2 and g.is_connected_within(comp):
                return ViolationRecord(
                    graph=g,
                    set_p=VertexSet(sets[a], g.n),
                    set_q=VertexSet(sets[b], g.n),
                    intersection=VertexSet(inter, g.n),
                    ell=9,
                    complement_components=1,
                )
    raise WitnessFailure(
        "no pair of longest paths with a 9-vertex intersection and a "
        "connected 2-vertex complement"
    )


def reduce_to_tight_case(g: SmallGraph, p: PathSeq, q: PathSeq) -> SmallGraph:
    """Delete the vertices outside both paths and join the two private ones.

    Applies when each path has exactly one private vertex.  The reduced
    graph keeps both paths longest and keeps the non-separator property;
    both facts are re-verified at runtime and failure raises instead of
    being silently ignored.
    """
    if p.graph != g or q.graph != g:
        raise PreconditionError("paths do not belong to the given graph")
    profile = longest_path_profile(g)
    sp = p.vertex_set().mask
    sq = q.vertex_set().mask
    if sp == sq:
        raise PreconditionError("paths have the same vertex set")
    if len(p.vertices) != profile.order or len(q.vertices) != profile.order:
        raise PreconditionError("paths are not longest paths of the graph")
    p_only = sp & ~sq
    q_only = sq & ~sp
    if p_only.bit_count() != 1 or q_only.bit_count() != 1:
        raise PreconditionError("each path must have exactly one private vertex")
    union = sp | sq
    sub, labels = g.induced_subgraph(union)
    pos = {v: i for i, v in enumerate(labels)}
    g1 = sub.add_edge(pos[next(bits(p_only))], pos[next(bits(q_only))])

    def relabel_mask(mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= 1 << pos[v]
        return out

    sp1, sq1 = relabel_mask(sp), relabel_mask(sq)
    prof1 = longest_path_profile(g1)
    if prof1.order != profile.order or sp1 not in prof1.sets or sq1 not in prof1.sets:
        raise ReductionAssertionError("paths are no longer longest in the reduced graph")
    if not is_separator(g, sp & sq) and is_separator(g1, sp1 & sq1):
        raise ReductionAssertionError("non-separator property did not transfer")
    return g1


# ---------------------------------------------------------------------------
# Sweep machinery


def _default_shard_count(n: int) -> int:
    if n <= 7:
        return 1
    return 16 if n == 8 else 64


def _connected_within(adj: Sequence[int], sm: int) -> bool:
    reach = sm & -sm
    frontier = reach
    while frontier:
        nxt = 0
        t = frontier
        while t:
            b = t & -t
            t ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & sm & ~reach
        reach |= frontier
    return reach == sm


def _shard_graphs(n: int, shard_id: int, shard_count: int, source: Optional[str]):
    if source is None:
        yield from enumerate_connected(n, GenerationShard(n, shard_id, shard_count))
    else:
        for idx, g in enumerate(external_source(source, n)):
            if idx % shard_count == shard_id:
                yield g


def _shard_partial(args) -> dict:
    """Sweep one shard; returns a JSON-serializable partial result."""
    n, shard_id, shard_count, source = args
    full = (1 << n) - 1
    total = 0
    with_pairs = 0
    hist: dict[int, int] = {}
    violations: list[dict] = []
    for g in _shard_graphs(n, shard_id, shard_count, source):
        total += 1
        adj = g.adj
        sets = scan_distinct_sets(n, adj)
        if sets is None:
            continue
        with_pairs += 1
        for a in range(len(sets)):
            sa = sets[a]
            for b in range(a + 1, len(sets)):
                inter = sa & sets[b]
                ell = inter.bit_count()
                hist[ell] = hist.get(ell, 0) + 1
                comp = full & ~inter
                if comp and _connected_within(adj, comp):
                    violations.append(
                        {
                            "n": n,
                            "graph6": encode_graph6(g),
                            "set_p": [v + 1 for v in bits(sa)],
                            "set_q": [v + 1 for v in bits(sets[b])],
                            "ell": ell,
                        }
                    )
    return {
        "shard_id": shard_id,
        "graphs_total": total,
        "graphs_with_distinct_pairs": with_pairs,
        "ell_histogram": {str(k): v for k, v in sorted(hist.items())},
        "violations": violations,
    }


@dataclass
class SweepReport:
    n: int
    graphs_total: int
    graphs_with_distinct_pairs: int
    ell_histogram: dict[int, int]
    violations: list[dict]
    wall_time: float
    shards_done: list[int]
    shard_count: int

    @property
    def complete(self) -> bool:
        return len(self.shards_done) == self.shard_count

    @property
    def theorem_holds(self) -> bool:
        return not self.violations

    def expected_total(self) -> Optional[int]:
        return CONNECTED_COUNTS.get(self.n)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_total": self.graphs_total,
            "graphs_with_distinct_pairs": self.graphs_with_distinct_pairs,
            "ell_histogram": {str(k): v for k, v in sorted(self.ell_histogram.items())},
            "violations": self.violations,
            "wall_time": self.wall_time,
            "shards_done": self.shards_done,
            "shard_count": self.shard_count,
        }


def revalidate_violation(record: dict) -> None:
    """Recompute a recorded violation from its graph6 string; raise if bogus."""
    g = decode_graph6(record["graph6"])
    profile = longest_path_profile(g)
    sp = sum(1 << (v - 1) for v in record["set_p"])
    sq = sum(1 << (v - 1) for v in record["set_q"])
    if sp not in profile.sets or sq not in profile.sets or sp == sq:
        raise ReductionAssertionError("recorded sets are not distinct longest-path sets")
    inter = sp & sq
    if inter.bit_count() != record["ell"]:
        raise ReductionAssertionError("recorded ell does not match the intersection")
    if is_separator(g, inter):
        raise ReductionAssertionError("recorded intersection is a separator after all")


def _load_checkpoint(path: Path, n: int, shard_count: int) -> dict[int, dict]:
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"unreadable checkpoint {path}: {exc}") from exc
    if not isinstance(data, dict) or "completed" not in data:
        raise CheckpointError(f"checkpoint {path} has no completed-shard map")
    if data.get("n") != n or data.get("shard_count") != shard_count:
        raise CheckpointError(
            f"checkpoint {path} is for n={data.get('n')}, "
            f"shard_count={data.get('shard_count')}; requested n={n}, "
            f"shard_count={shard_count}"
        )
    return {int(k): v for k, v in data["completed"].items()}


def _save_checkpoint(path: Path, n: int, shard_count: int, completed: dict[int, dict]) -> None:
    payload = {
        "n": n,
        "shard_count": shard_count,
        "completed": {str(k): v for k, v in sorted(completed.items())},
    }
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(payload, sort_keys=True))
    tmp.replace(path)


def verify_n(
    n: int,
    *,
    jobs: int = 1,
    shard_count: Optional[int] = None,
    checkpoint: Optional[str | Path] = None,
    source: Optional[str | Path] = None,
) -> SweepReport:
    """Sweep all connected graphs of order n for violating pairs.

    ``source`` switches enumeration from the internal generator to a
    graph6 file.  The report is independent of ``jobs``; shards are
    idempotent and re-runnable, and a checkpoint file makes the sweep
    resumable after interruption.
    """
    if source is None and not 1 <= n <= 10:
        raise ValueError("internal generation supports n in [1, 10]; use a graph6 source")
    if shard_count is None:
        shard_count = _default_shard_count(n)
    src = str(source) if source is not None else None
    started = time.time()
    completed: dict[int, dict] = {}
    ckpt_path = Path(checkpoint) if checkpoint else None
    if ckpt_path and ckpt_path.exists():
        completed = _load_checkpoint(ckpt_path, n, shard_count)
    pending = [
        (n, sid, shard_count, src) for sid in range(shard_count) if sid not in completed
    ]
    if pending:
        if jobs > 1:
            ctx = multiprocessing.get_context()
            with ctx.Pool(processes=min(jobs, len(pending))) as pool:
                for partial in pool.imap_unordered(_shard_partial, pending):
                    completed[partial["shard_id"]] = partial
                    if ckpt_path:
                        _save_checkpoint(ckpt_path, n, shard_count, completed)
        else:
            for args in pending:
                partial = _shard_partial(args)
                completed[partial["shard_id"]] = partial
                if ckpt_path:
                    _save_checkpoint(ckpt_path, n, shard_count, completed)

    hist: dict[int, int] = {}
    violations: list[dict] = []
    total = 0
    with_pairs = 0
    for sid in sorted(completed):
        part = completed[sid]
        total += part["graphs_total"]
        with_pairs += part["graphs_with_distinct_pairs"]
        for k, v in part["ell_histogram"].items():
            hist[int(k)] = hist.get(int(k), 0) + v
        violations.extend(part["violations"])
    violations.sort(key=lambda r: (r["graph6"], r["set_p"], r["set_q"]))
    for record in violations:
        revalidate_violation(record)
    return SweepReport(
        n=n,
        graphs_total=total,
        graphs_with_distinct_pairs=with_pairs,
        ell_histogram=hist,
        violations=violations,
        wall_time=time.time() - started,
        shards_done=sorted(completed),
        shard_count=shard_count,
    )
