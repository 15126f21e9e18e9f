from __future__ import annotations

import pytest

from longpath import (
    CONNECTED_COUNTS,
    GenerationShard,
    canonical_form,
    count_connected,
    enumerate_connected,
)
from longpath.generate import _level_stream, external_source
from longpath.graph6 import write_graph6

from oracles import automorphism_count, brute_force_isomorphic

# Isomorphism classes of ALL graphs (connected or not) on n = 1..7.
ALL_CLASSES = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


class TestLevelStream:
    @pytest.mark.parametrize("n", sorted(ALL_CLASSES))
    def test_class_counts(self, n):
        if n == 7:
            pytest.skip("covered by the connected-count tests below")
        assert sum(1 for _ in _level_stream(n)) == ALL_CLASSES[n]

    def test_no_duplicates_up_to_6(self):
        for n in range(1, 7):
            forms = [canonical_form(g) for g in _level_stream(n)]
            assert len(forms) == len(set(forms))

    def test_pairwise_nonisomorphic_n4(self):
        graphs = list(_level_stream(4))
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert not brute_force_isomorphic(graphs[i], graphs[j])


class TestEnumerateConnected:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts_match_reference(self, n):
        assert count_connected(n) == CONNECTED_COUNTS[n]

    def test_all_connected_and_distinct(self):
        forms = set()
        for g in enumerate_connected(6):
            assert g.n == 6 and g.is_connected()
            form = canonical_form(g)
            assert form not in forms
            forms.add(form)
        assert len(forms) == CONNECTED_COUNTS[6]

    def test_labeled_count_recovered_by_orbit_sizes(self):
        # Orbit-counting cross-check: summing n!/|Aut(G)| over the stream
        # must reproduce the labeled connected-graph count, 728 at n = 5.
        total = sum(120 // automorphism_count(g) for g in enumerate_connected(5))
        assert total == 728

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_connected(0))
        with pytest.raises(ValueError):
            list(enumerate_connected(11))


class TestShards:
    def test_bad_shard_rejected(self):
        with pytest.raises(ValueError):
            GenerationShard(8, 4, 4)
        with pytest.raises(ValueError):
            list(enumerate_connected(8, GenerationShard(7, 0, 4)))

    @pytest.mark.parametrize("shard_count", [2, 5])
    def test_shards_partition_the_stream(self, shard_count):
        full = sorted(canonical_form(g) for g in enumerate_connected(7))
        pieces: list[bytes] = []
        for sid in range(shard_count):
            shard = GenerationShard(7, sid, shard_count)
            pieces.extend(canonical_form(g) for g in enumerate_connected(7, shard))
        assert sorted(pieces) == full

    def test_n1_single_shard_emits(self):
        assert sum(1 for _ in enumerate_connected(1, GenerationShard(1, 0, 3))) == 1
        assert sum(1 for _ in enumerate_connected(1, GenerationShard(1, 2, 3))) == 0


class TestExternalSource:
    def test_round_trip_through_file(self, tmp_path):
        path = tmp_path / "n5.g6"
        originals = list(enumerate_connected(5))
        with open(path, "w", encoding="ascii") as fh:
            write_graph6(fh, originals)
        assert list(external_source(path, 5)) == originals

    def test_wrong_order_rejected(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("A_\n")
        with pytest.raises(ValueError):
            list(external_source(path, 5))

    def test_disconnected_rejected(self, tmp_path):
        path = tmp_path / "disc.g6"
        path.write_text("A?\n")
        with pytest.raises(ValueError):
            list(external_source(path, 2))
        assert [g.n for g in external_source(path, 2, require_connected=False)] == [2]
