import json

from iocodes import audit_graphs, audit_trees, verify_tight_families
from iocodes.audit import records_to_csv, sample_twin_free_graphs, summary_to_json
from iocodes.formats import parse_graph6
from iocodes.graphs import VertexSet
from iocodes.verify import is_io_code


class TestTreeAudit:
    def test_small_run_clean(self):
        records, summary = audit_trees(9, 3)
        assert summary["violations"] == 0
        assert summary["instances"] == len(records)
        # the degree-3 subdivided star on 7 vertices is the one flagged row
        exceptional = [r for r in records if r.bound_status == "exceptional_star"]
        assert len(exceptional) == 1
        assert exceptional[0].n == 7

    def test_default_delta_is_per_instance(self):
        records, _ = audit_trees(8)
        for r in records:
            assert r.delta == max(3, r.max_degree)

    def test_extremal_detection(self):
        records, _ = audit_trees(12, 3)
        extremal = [r for r in records if r.is_extremal]
        assert any(r.n == 12 and r.gamma == 10 for r in extremal)

    def test_gamma_floor_at_n5(self):
        records, _ = audit_trees(5, 3)
        assert records and all(r.gamma >= 4 for r in records)

    def test_witness_reverifies_from_record(self):
        records, _ = audit_trees(9)
        for r in records:
            g = parse_graph6(r.graph6)
            code = VertexSet(g.n, r.witness_code)
            assert is_io_code(g, code).ok
            assert len(code) == r.gamma

    def test_deterministic_and_delta_monotone(self):
        records3, _ = audit_trees(9, 3)
        again, _ = audit_trees(9, 3)
        assert records_to_csv(records3) == records_to_csv(again)
        records4, _ = audit_trees(9, 4)
        gamma4 = {r.graph6: r.gamma for r in records4}
        for r in records3:
            assert gamma4[r.graph6] == r.gamma  # gamma does not depend on delta


class TestGraphAudit:
    def test_n5_clean(self):
        records, summary = audit_graphs(5)
        assert summary["violations"] == 0
        assert summary["instances"] == 5
        assert summary["labeled_instances"] > summary["instances"]

    def test_c5_row(self):
        records, _ = audit_graphs(5)
        c5_rows = [r for r in records if r.m == 5 and r.max_degree == 2]
        assert len(c5_rows) == 1 and c5_rows[0].gamma == 4


class TestTightFamilies:
    def test_report(self):
        report = verify_tight_families(3, 3, exact_ps=(3,), decision_ps=())
        assert report["ok"]
        assert report["stars"][3]["expected"] == (6, 5, 10)
        assert report["gadget_cycles"][3]["gamma"] == 15

    def test_reference_only_mode(self):
        report = verify_tight_families(3, 6, exact_ps=(), decision_ps=())
        assert report["ok"]
        assert report["gadget_cycles"][6]["reference_size"] == 30
        assert 4 not in report["gadget_cycles"]


class TestSampledAudit:
    def test_seeded_and_clean(self):
        from iocodes.audit import audit_graphs_sampled

        records, summary = audit_graphs_sampled(8, 8, 11, seed=5)
        assert summary["violations"] == 0
        assert summary["seed"] == 5
        again, _ = audit_graphs_sampled(8, 8, 11, seed=5)
        assert records_to_csv(records) == records_to_csv(again)
        for r in records:
            assert r.c4_free and r.twin_free


class TestWorkers:
    def test_pool_output_matches_serial(self, monkeypatch):
        from iocodes.audit import WORKERS_ENV

        serial, _ = audit_trees(9, 3)
        monkeypatch.setenv(WORKERS_ENV, "3")
        parallel, _ = audit_trees(9, 3)
        assert records_to_csv(serial) == records_to_csv(parallel)


class TestHelpers:
    def test_sampler_seeded(self):
        a = sample_twin_free_graphs(5, 8, 10, seed=11)
        b = sample_twin_free_graphs(5, 8, 10, seed=11)
        assert [g.adj for g in a] == [g.adj for g in b]

    def test_csv_and_summary_shapes(self):
        records, summary = audit_trees(7)
        text = records_to_csv(records)
        assert text.splitlines()[0].startswith("graph6,n,m,")
        assert len(text.splitlines()) == len(records) + 1
        payload = json.loads(summary_to_json(summary))
        assert payload["violations"] == 0
