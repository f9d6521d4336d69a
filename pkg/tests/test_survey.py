import json

import pytest

from harmolight.loops import LoopEnsemble
from harmolight.survey import (
    EnumerationLimitExceeded,
    admissibility,
    conjecture1_targets,
    enumerate_graphs,
    run_survey,
)

E = LoopEnsemble.from_mapping


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (5, 1024)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphs(n)) == count

    def test_all_distinct(self):
        graphs = list(enumerate_graphs(4))
        assert len(set(graphs)) == 64

    def test_limit(self):
        with pytest.raises(EnumerationLimitExceeded):
            next(enumerate_graphs(8))
        with pytest.raises(EnumerationLimitExceeded):
            run_survey(30)


class TestAdmissibility:
    def test_single_fixed_point(self):
        assert admissibility(E({1: 1})).admissible

    def test_p3_ensemble(self):
        assert admissibility(E({1: 2, 2: 1})).admissible

    def test_three_fixed_points(self):
        v = admissibility(E({1: 3}))
        assert not v.admissible and not v.cond1

    def test_fixed_points_required(self):
        assert not admissibility(E({2: 2})).admissible


class TestTargets:
    def test_dimension_bound(self):
        targets = conjecture1_targets(4)
        assert all(1 <= t.dimension <= 4 for t in targets)
        assert len(set(targets)) == len(targets)
        # partitions of 1..4 into parts >= 1
        assert len(targets) == 1 + 2 + 3 + 5


class TestRunSurvey:
    def test_one_vertex(self):
        r = run_survey(1)
        assert [t["tree"] for t in r.trees] == ["I1"]
        assert [row["loops"] for row in r.loops] == ["L1"]
        assert r.violations == []

    def test_three_vertices(self):
        r = run_survey(3)
        assert r.total_graphs == 1 + 2 + 8
        assert r.violations == []
        assert sum(row["count"] for row in r.loops) == r.total_graphs

    def test_five_vertices(self):
        r = run_survey(5)
        assert r.total_graphs == 1 + 2 + 8 + 64 + 1024
        assert r.violations == []
        notes = r.conjecture_notes
        assert notes["conjecture_1"]["targets"] == 11
        assert "conjunction_reading" in notes["condition_3"]
        assert "literal_reading" in notes["condition_3"]

    def test_examples_reproduce_structure(self):
        from harmolight.analysis import analyze
        from harmolight.graphs import parse_graph6

        r = run_survey(4)
        for row in r.trees:
            assert analyze(parse_graph6(row["example"]["graph6"])).tree.render() == row["tree"]
        for row in r.loops:
            assert analyze(parse_graph6(row["example"]["graph6"])).loops.render() == row["loops"]

    def test_workers_deterministic(self):
        assert run_survey(4, workers=1).to_json() == run_survey(4, workers=2).to_json()

    def test_json_roundtrip(self):
        r = run_survey(3)
        assert json.loads(r.to_json()) == r.as_dict()

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            run_survey(0)
