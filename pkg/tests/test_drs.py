import json

import pytest

from resspec.drs import (
    CollisionReport,
    DrsVerdict,
    PROVEN_TAGS,
    TAG_BALANCED,
    TAG_CONJECTURE,
    TAG_DOMINANT,
    TAG_NEAR_BALANCED,
    TAG_NOT_KMN,
    TAG_TWO_ROW,
    check_theorems,
    classify_kmn,
    complete_bipartite_parts,
    find_collisions,
    index_spectra,
    spectra_cache_path,
    verify_drs,
)
from resspec.graphs import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    new_graph,
    path_graph,
)
from resspec.resistance import resistance_spectrum


class TestClassify:
    @pytest.mark.parametrize(
        "m,n,tag",
        [
            (3, 3, TAG_BALANCED),
            (1, 1, TAG_BALANCED),
            (2, 3, TAG_NEAR_BALANCED),
            (4, 5, TAG_NEAR_BALANCED),
            (1, 2, TAG_NEAR_BALANCED),
            (2, 7, TAG_TWO_ROW),   # 7 > 3*2+1 is false, so the two-row tag wins
            (2, 4, TAG_TWO_ROW),
            (1, 5, TAG_DOMINANT),
            (1, 8, TAG_DOMINANT),
            (3, 11, TAG_DOMINANT),
            (3, 5, TAG_CONJECTURE),
            (1, 3, TAG_CONJECTURE),
            (1, 4, TAG_CONJECTURE),
            (3, 10, TAG_CONJECTURE),  # 10 = 3*3+1 exactly, not strictly above
        ],
    )
    def test_tags(self, m, n, tag):
        assert classify_kmn(m, n) == tag
        assert classify_kmn(n, m) == tag

    def test_invalid(self):
        with pytest.raises(GraphError):
            classify_kmn(0, 3)


class TestCompleteBipartiteDetection:
    def test_positive_cases(self):
        assert complete_bipartite_parts(complete_bipartite(2, 3)) == (2, 3)
        assert complete_bipartite_parts(cycle_graph(4)) == (2, 2)
        assert complete_bipartite_parts(new_graph(4, [(0, 1), (0, 2), (0, 3)])) == (1, 3)
        assert complete_bipartite_parts(new_graph(2, [(0, 1)])) == (1, 1)

    def test_negative_cases(self):
        assert complete_bipartite_parts(path_graph(4)) is None  # bipartite, not complete
        assert complete_bipartite_parts(complete_graph(3)) is None  # odd cycle
        assert complete_bipartite_parts(new_graph(3, [(0, 1)])) is None  # disconnected


class TestIndex:
    def test_n2(self):
        idx = index_spectra(2)
        assert idx.groups == {'[["1",1]]': ("A_",)}

    def test_n4_no_collisions(self):
        idx = index_spectra(4)
        assert idx.class_count == 6
        assert len(idx.groups) == 6
        assert not idx.collision_groups()

    def test_n5_complete_partition(self):
        idx = index_spectra(5)
        assert idx.class_count == 21
        total = sum(len(v) for v in idx.groups.values())
        assert total == 21

    def test_cache_files(self, tmp_path):
        idx = index_spectra(4, cache_dir=str(tmp_path))
        assert (tmp_path / "connected-4.g6").exists()
        assert (tmp_path / "spectra-4.tsv").exists()
        again = index_spectra(4, cache_dir=str(tmp_path))
        assert again.groups == idx.groups
        # cache rows are graph6 TAB spectrum-json
        lines = (tmp_path / "spectra-4.tsv").read_text().splitlines()
        assert len(lines) == 6
        for line in lines:
            g6, spec = line.split("\t")
            json.loads(spec)

    def test_corrupt_cache_rejected(self, tmp_path):
        path = spectra_cache_path(str(tmp_path), 3)
        with open(path, "w") as fh:
            fh.write("one-column-only\n")
        with pytest.raises(GraphError, match="graph6<TAB>"):
            index_spectra(3, cache_dir=str(tmp_path))


class TestVerdicts:
    def test_k22_determined(self):
        verdict = verify_drs(complete_bipartite(2, 2))
        assert verdict.determined
        assert verdict.theorem_tag == TAG_BALANCED
        assert verdict.impostors == ()
        assert verdict.order == 4

    def test_star_determined(self):
        verdict = verify_drs(new_graph(4, [(0, 1), (0, 2), (0, 3)]))
        assert verdict.determined and verdict.theorem_tag == TAG_CONJECTURE

    def test_k33_determined_exhaustively(self):
        verdict = verify_drs(complete_bipartite(3, 3))
        assert verdict.determined and verdict.theorem_tag == TAG_BALANCED

    def test_non_bipartite_tag(self):
        verdict = verify_drs(complete_graph(3))
        assert verdict.theorem_tag == TAG_NOT_KMN

    def test_index_reuse_and_mismatch(self):
        idx = index_spectra(4)
        assert verify_drs(cycle_graph(4), index=idx).determined
        with pytest.raises(GraphError, match="order"):
            verify_drs(path_graph(3), index=idx)

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError, match="connected"):
            verify_drs(new_graph(3, [(0, 1)]))

    def test_verdict_invariant(self):
        with pytest.raises(ValueError):
            DrsVerdict("A_", 2, True, TAG_BALANCED, ("Bw",), "[]")

    def test_verdict_json(self):
        doc = verify_drs(complete_bipartite(1, 1)).to_json_dict()
        assert doc["determined"] is True
        assert doc["target"] == "A_"
        assert doc["spectrum"] == [["1", 1]]


class TestTheoremSweep:
    def test_up_to_six(self, cache_dir):
        verdicts = check_theorems(6, cache_dir=cache_dir)
        by_tag = {}
        for v in verdicts:
            by_tag.setdefault(v.theorem_tag, []).append(v)
        # every proven-shape instance must be determined
        for tag in PROVEN_TAGS:
            for v in by_tag.get(tag, []):
                assert v.determined, v.to_json()
        # the sweep covers K_{1,5}, K_{2,4}, K_{3,3} at six vertices
        targets = {v.target_graph6 for v in verdicts}
        from resspec.enumeration import canonical_graph
        from resspec.graphs import to_graph6

        for m, n in [(1, 5), (2, 4), (3, 3)]:
            assert to_graph6(canonical_graph(complete_bipartite(m, n))) in targets

    def test_deterministic(self, cache_dir):
        a = [v.to_json() for v in check_theorems(5, cache_dir=cache_dir)]
        b = [v.to_json() for v in check_theorems(5, cache_dir=cache_dir)]
        assert a == b


class TestCollisions:
    def test_small_orders_empty(self):
        assert find_collisions(3).pairs == ()
        assert find_collisions(4).pairs == ()
        assert find_collisions(5).pairs == ()

    def test_report_json(self):
        report = find_collisions(4)
        doc = report.to_json_dict()
        assert doc == {"order": 4, "pair_count": 0, "pairs": []}

    def test_pairs_reverify(self, cache_dir):
        # exercise the re-verification path on whatever n=7 yields
        report = find_collisions(7, cache_dir=cache_dir)
        for a, b, spec in report.pairs:
            from resspec.enumeration import are_isomorphic
            from resspec.graphs import parse_graph6

            ga, gb = parse_graph6(a), parse_graph6(b)
            assert not are_isomorphic(ga, gb)
            assert resistance_spectrum(ga).to_json() == spec
            assert resistance_spectrum(gb).to_json() == spec
