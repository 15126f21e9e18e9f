from __future__ import annotations

import json

import pytest

from longpath import (
    PathSeq,
    SmallGraph,
    build_witness,
    check_witness,
    longest_path_profile,
    reconstruct_path,
    verify_n,
)
from longpath.verify import (
    CheckpointError,
    PreconditionError,
    ReductionAssertionError,
    WitnessFailure,
    reduce_to_tight_case,
    revalidate_violation,
)
from longpath.graph6 import write_graph6
from longpath.generate import enumerate_connected
from longpath.separators import iter_violating_pairs


class TestWitness:
    def test_builtin_passes(self):
        rec = check_witness()
        assert rec.ell == 9
        assert len(rec.set_p & rec.set_q) == 9
        comp = sorted(rec.intersection.complement())
        assert len(comp) == 2
        assert rec.graph.has_edge(*comp)

    def test_c5_fails(self, c5):
        with pytest.raises(WitnessFailure):
            check_witness(c5)

    def test_disconnected_fails(self):
        with pytest.raises(WitnessFailure):
            check_witness(SmallGraph.empty(4))

    def test_removing_complement_edge_breaks_pair(self):
        # Dropping the edge between the two excluded vertices of the
        # documented violating pair disconnects that complement.
        g = build_witness()
        prof = longest_path_profile(g)
        complements = {
            tuple(sorted(rec.intersection.complement()))
            for rec in iter_violating_pairs(g, prof)
        }
        assert (2, 7) in complements
        adj = [m for m in g.adj]
        adj[2] &= ~(1 << 7)
        adj[7] &= ~(1 << 2)
        g2 = SmallGraph(11, tuple(adj))
        prof2 = longest_path_profile(g2)
        complements2 = {
            tuple(sorted(rec.intersection.complement()))
            for rec in iter_violating_pairs(g2, prof2)
        }
        assert (2, 7) not in complements2


class TestReduction:
    def _witness_pair(self):
        g = build_witness()
        rec = next(iter_violating_pairs(g, longest_path_profile(g)))
        return g, reconstruct_path(g, rec.set_p), reconstruct_path(g, rec.set_q)

    def test_identity_on_witness(self):
        # No vertices lie outside the union and the private vertices are
        # already adjacent, so the reduction returns the witness itself.
        g, p, q = self._witness_pair()
        g1 = reduce_to_tight_case(g, p, q)
        assert g1.n == g.n and g1.edge_count == g.edge_count

    def test_same_vertex_set_rejected(self, c5):
        p = PathSeq(c5, (0, 1, 2, 3, 4))
        q = PathSeq(c5, (4, 3, 2, 1, 0))
        with pytest.raises(PreconditionError):
            reduce_to_tight_case(c5, p, q)

    def test_non_longest_rejected(self):
        g, p, _ = self._witness_pair()
        short = PathSeq(g, p.vertices[:4])
        with pytest.raises(PreconditionError):
            reduce_to_tight_case(g, short, p)

    def test_pendant_extension_still_reduces(self):
        # A pendant on vertex 10 lengthens the longest paths by one; the
        # violating pair survives and the reduction re-verifies on it.
        g = build_witness()
        adj = list(g.adj) + [1 << 10]
        adj[10] |= 1 << 11
        g2 = SmallGraph(12, tuple(adj))
        prof = longest_path_profile(g2)
        rec = next(iter_violating_pairs(g2, prof), None)
        if rec is None:
            pytest.skip("pendant changes the profile; nothing to reduce")
        p = reconstruct_path(g2, rec.set_p)
        q = reconstruct_path(g2, rec.set_q)
        g1 = reduce_to_tight_case(g2, p, q)
        assert g1.n == len(p.vertex_set() | q.vertex_set())

    def test_wrong_graph_rejected(self, c5, path3):
        p = PathSeq(path3, (0, 1, 2))
        with pytest.raises(PreconditionError):
            reduce_to_tight_case(c5, p, p)


class TestVerifySmall:
    @pytest.mark.parametrize("n,total", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
    def test_counts_and_no_violations(self, n, total):
        report = verify_n(n)
        assert report.graphs_total == total == report.expected_total()
        assert report.complete and report.theorem_holds
        assert report.violations == []

    def test_histogram_keys_are_ints(self):
        report = verify_n(6)
        assert all(isinstance(k, int) for k in report.ell_histogram)
        assert sum(report.ell_histogram.values()) > 0

    def test_external_source_matches_internal(self, tmp_path):
        path = tmp_path / "n6.g6"
        with open(path, "w", encoding="ascii") as fh:
            write_graph6(fh, enumerate_connected(6))
        internal = verify_n(6).to_json_dict()
        external = verify_n(6, source=path).to_json_dict()
        for d in (internal, external):
            d.pop("wall_time")
        assert internal == external

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            verify_n(11)


class TestCheckpoint:
    def test_resume_skips_completed_shards(self, tmp_path):
        ckpt = tmp_path / "ck.json"
        first = verify_n(7, shard_count=4, checkpoint=ckpt)
        assert first.complete
        data = json.loads(ckpt.read_text())
        assert sorted(map(int, data["completed"])) == [0, 1, 2, 3]
        # poison one shard's totals; a resumed run must trust the file
        data["completed"]["2"]["graphs_total"] += 5
        ckpt.write_text(json.dumps(data))
        resumed = verify_n(7, shard_count=4, checkpoint=ckpt)
        assert resumed.graphs_total == first.graphs_total + 5

    def test_mismatched_checkpoint_rejected(self, tmp_path):
        ckpt = tmp_path / "ck.json"
        verify_n(5, shard_count=2, checkpoint=ckpt)
        with pytest.raises(CheckpointError):
            verify_n(6, shard_count=2, checkpoint=ckpt)
        with pytest.raises(CheckpointError):
            verify_n(5, shard_count=3, checkpoint=ckpt)

    def test_corrupt_checkpoint_rejected(self, tmp_path):
        ckpt = tmp_path / "ck.json"
        ckpt.write_text("{not json")
        with pytest.raises(CheckpointError):
            verify_n(5, shard_count=2, checkpoint=ckpt)


class TestRevalidation:
    def test_witness_record_revalidates(self):
        rec = check_witness().to_json_dict()
        revalidate_violation(rec)  # must not raise

    def test_tampered_record_rejected(self):
        rec = check_witness().to_json_dict()
        bad = dict(rec, ell=rec["ell"] - 1)
        with pytest.raises(ReductionAssertionError):
            revalidate_violation(bad)

    def test_non_longest_sets_rejected(self):
        rec = check_witness().to_json_dict()
        bad = dict(rec, set_p=[1, 2, 3], ell=len(set(rec["set_q"]) & {1, 2, 3}))
        with pytest.raises(ReductionAssertionError):
            revalidate_violation(bad)
