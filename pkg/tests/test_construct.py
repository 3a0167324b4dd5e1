import pytest

from conftest import random_tree
from iocodes import (
    BadParam,
    BoundStatus,
    DegreeExceeded,
    FourCyclePresent,
    Graph,
    NoCode,
    NotATree,
    TooSmall,
    check_bound,
    construct_graph_code,
    construct_tree_code,
    enumerate_small_graphs,
    enumerate_trees,
    find_open_twins,
    gen_star_plus_edge,
    gen_subcubic_gp,
    gen_subdivided_star,
    gen_tight_tree_pair,
    is_io_code,
    max_degree,
    solve,
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


PAW = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


class TestCheckBound:
    def test_equality_cases(self):
        assert check_bound(12, 10, 3) is BoundStatus.WITHIN_BOUND
        assert check_bound(9, 8, 4, is_exceptional_star=True) is BoundStatus.EXCEPTIONAL_STAR
        assert check_bound(6, 6, 3) is BoundStatus.VIOLATION

    def test_flag_required_for_exceptional(self):
        assert check_bound(9, 8, 4) is BoundStatus.VIOLATION

    def test_integer_exactness(self):
        assert check_bound(11, 9, 3) is BoundStatus.WITHIN_BOUND  # 54 <= 55
        assert check_bound(11, 10, 3) is BoundStatus.VIOLATION  # 60 > 55

    def test_bad_params(self):
        with pytest.raises(BadParam):
            check_bound(0, 0, 3)


class TestTreeConstructor:
    def test_exceptional_star(self):
        for delta in (3, 4, 5):
            g, _ = gen_subdivided_star(delta)
            code, trace = construct_tree_code(g, delta)
            assert trace.exceptional_star
            assert len(code) == 2 * delta
            status = check_bound(g.n, len(code), delta, is_exceptional_star=True)
            assert status is BoundStatus.EXCEPTIONAL_STAR

    def test_star_with_larger_delta_not_exceptional(self):
        g, _ = gen_subdivided_star(3)
        code, trace = construct_tree_code(g, 4)
        assert not trace.exceptional_star
        assert check_bound(g.n, len(code), 4) is BoundStatus.WITHIN_BOUND

    def test_tight_pair_meets_bound_exactly(self):
        for delta in (3, 4):
            g, _ = gen_tight_tree_pair(delta)
            code, trace = construct_tree_code(g, delta)
            assert is_io_code(g, code).ok
            assert 2 * delta * len(code) <= (2 * delta - 1) * g.n
            # the instance is extremal, so the constructor cannot do better
            assert len(code) == 4 * delta - 2

    def test_gadget_tree_tight(self):
        # ring with one cycle edge deleted: a tree needing exactly 5/6 n
        from iocodes import delete_edge

        g, spec = gen_subcubic_gp(3)
        ring = spec.distinguished["cycle"]
        t = delete_edge(g, (ring[0], ring[-1]))
        code, trace = construct_tree_code(t, 3)
        assert is_io_code(t, code).ok
        assert 6 * len(code) == 5 * t.n

    def test_validation_errors(self):
        with pytest.raises(BadParam):
            construct_tree_code(path(6), 2)
        with pytest.raises(TooSmall):
            construct_tree_code(path(4), 3)
        with pytest.raises(NotATree):
            construct_tree_code(C5, 3)
        with pytest.raises(NoCode):
            construct_tree_code(Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)]), 3)
        with pytest.raises(DegreeExceeded):
            g, _ = gen_subdivided_star(5)
            construct_tree_code(g, 4)

    def test_trace_union_reconstructs_code(self):
        for n in range(5, 12):
            for t in enumerate_trees(n):
                if find_open_twins(t):
                    continue
                d = max(3, max_degree(t))
                code, trace = construct_tree_code(t, d)
                union = set()
                for step in trace.steps:
                    union |= set(step.contributed)
                assert union == set(code)

    def test_exhaustive_small(self):
        for n in range(5, 13):
            for t in enumerate_trees(n):
                if find_open_twins(t):
                    continue
                d = max(3, max_degree(t))
                code, trace = construct_tree_code(t, d)
                assert is_io_code(t, code).ok
                status = check_bound(t.n, len(code), d, is_exceptional_star=trace.exceptional_star)
                assert status is not BoundStatus.VIOLATION
                assert not trace.warnings
                assert len(code) >= solve(t).gamma

    def test_random_larger_trees(self, rng):
        done = 0
        while done < 40:
            t = random_tree(rng.randint(13, 16), rng)
            if find_open_twins(t):
                continue
            done += 1
            d = max(3, max_degree(t))
            code, trace = construct_tree_code(t, d)
            assert is_io_code(t, code).ok
            assert check_bound(t.n, len(code), d, is_exceptional_star=trace.exceptional_star) is not BoundStatus.VIOLATION


class TestGraphConstructor:
    def test_c5(self):
        code, trace = construct_graph_code(C5, 3)
        assert is_io_code(C5, code).ok
        assert 6 * len(code) <= 5 * 5

    def test_paw_base(self):
        code, trace = construct_graph_code(PAW, 3)
        assert len(code) == 3
        assert is_io_code(PAW, code).ok

    def test_gadget_rings_exact(self):
        for p in (3, 5, 6):
            g, _ = gen_subcubic_gp(p)
            code, trace = construct_graph_code(g, 3)
            assert is_io_code(g, code).ok
            # extremal instance: the bound forces exactly 5p
            assert len(code) == 5 * p

    def test_star_plus_edge_patterns(self):
        for variant in ("g1", "g2", "g3"):
            for k in (2, 3, 4, 5):
                g, _ = gen_star_plus_edge(variant, k)
                d = max(3, max_degree(g))
                code, trace = construct_graph_code(g, d)
                assert is_io_code(g, code).ok
                assert check_bound(g.n, len(code), d) is not BoundStatus.VIOLATION

    def test_validation_errors(self):
        # twin-free 6-cycle with one chord still contains a 4-cycle
        chorded = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
        with pytest.raises(FourCyclePresent):
            construct_graph_code(chorded, 3)
        with pytest.raises(TooSmall):
            construct_graph_code(Graph(4, [(0, 1), (1, 2), (2, 3)]), 3)
        with pytest.raises(NoCode):
            construct_graph_code(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]), 3)

    def test_trees_routed(self):
        code, trace = construct_graph_code(path(7), 3)
        assert is_io_code(path(7), code).ok
        assert trace.steps[0].case == "tree_reduction"

    def test_exhaustive_small(self):
        for n in range(5, 8):
            for g in enumerate_small_graphs(n, connected=True, twin_free=True, c4_free=True, dedup=True):
                d = max(3, max_degree(g))
                code, trace = construct_graph_code(g, d)
                assert is_io_code(g, code).ok
                status = check_bound(g.n, len(code), d, is_exceptional_star=trace.exceptional_star)
                assert status is not BoundStatus.VIOLATION
                assert len(code) >= solve(g).gamma
