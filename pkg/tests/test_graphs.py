import pytest

from conftest import (
    brute_all_distances,
    brute_has_four_cycle,
    brute_open_twins,
    random_graph,
    random_tree,
)
from iocodes import (
    Disconnected,
    EmptyGraph,
    Graph,
    InvalidVertex,
    NotATree,
    NotPresent,
    VertexSet,
    classify_vertices,
    components,
    delete_edge,
    delete_vertex,
    diameter,
    find_induced_cycle,
    find_open_twins,
    gen_subcubic_gp,
    gen_subdivided_star,
    gen_tight_tree_pair,
    has_four_cycle,
    is_connected,
    longest_path_in_tree,
    max_degree,
    min_degree,
    open_neighborhood,
)
from iocodes.graphs import tree_path


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


PAW = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


class TestConstruction:
    def test_symmetry_and_handshake(self, rng):
        for _ in range(50):
            g = random_graph(rng.randint(1, 12), rng.random(), rng)
            for u in range(g.n):
                for v in g.neighbors(u):
                    assert u in g.neighbors(v)
            assert sum(g.degree_sequence()) == 2 * g.edge_count

    def test_rejects_bad_edges(self):
        with pytest.raises(InvalidVertex):
            Graph(3, [(0, 3)])
        with pytest.raises(InvalidVertex):
            Graph(3, [(1, 1)])

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1


class TestNeighborhoods:
    def test_path_center(self):
        assert sorted(open_neighborhood(path(3), 1)) == [0, 2]

    def test_triangle(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert sorted(open_neighborhood(g, 0)) == [1, 2]

    def test_star_center_degree(self):
        g, spec = gen_subdivided_star(4)
        center = spec.distinguished["center"]
        assert sorted(open_neighborhood(g, center)) == spec.distinguished["supports"]
        assert len(open_neighborhood(g, center)) == 4

    def test_out_of_range(self):
        with pytest.raises(InvalidVertex):
            open_neighborhood(path(3), 5)


class TestDegrees:
    def test_star_max_degree(self):
        g, _ = gen_subdivided_star(4)
        assert max_degree(g) == 4

    def test_cycle_regular(self):
        assert max_degree(cycle(5)) == min_degree(cycle(5)) == 2

    def test_paw(self):
        assert max_degree(PAW) == 3
        assert min_degree(PAW) == 1

    def test_empty(self):
        with pytest.raises(EmptyGraph):
            max_degree(Graph(0))


class TestOpenTwins:
    def test_p3_leaves(self):
        assert find_open_twins(path(3)) == [(0, 2)]

    def test_c4_diagonals(self):
        assert find_open_twins(cycle(4)) == [(0, 2), (1, 3)]

    def test_subdivided_stars_twin_free(self):
        for delta in range(2, 7):
            g, _ = gen_subdivided_star(delta)
            assert find_open_twins(g) == []

    def test_agrees_with_bruteforce(self, rng):
        for _ in range(120):
            g = random_graph(rng.randint(1, 12), rng.random(), rng)
            assert find_open_twins(g) == brute_open_twins(g)


class TestFourCycle:
    def test_c4(self):
        assert has_four_cycle(cycle(4))

    def test_trees_never(self, rng):
        for n in range(2, 12):
            assert not has_four_cycle(random_tree(n, rng))

    def test_gadget_cycle_free(self):
        g, _ = gen_subcubic_gp(3)
        assert not has_four_cycle(g)

    def test_agrees_with_literal_search(self, rng):
        for _ in range(100):
            g = random_graph(rng.randint(4, 11), rng.uniform(0.1, 0.6), rng)
            assert has_four_cycle(g) == brute_has_four_cycle(g)


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(path(5))

    def test_two_edges(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert not is_connected(g)
        assert len(components(g)) == 2

    def test_tree_edge_is_bridge(self, rng):
        t = random_tree(8, rng)
        u, v = t.edges()[3]
        assert len(components(delete_edge(t, (u, v)))) == 2

    def test_component_maps(self):
        g = Graph(5, [(3, 4), (0, 2)])
        for comp, new_to_old, old_to_new in components(g):
            for new, old in enumerate(new_to_old):
                assert old_to_new[old] == new


class TestClassify:
    def test_p5(self):
        tags = classify_vertices(path(5))
        assert sorted(tags["leaf"]) == [0, 4]
        assert sorted(tags["support"]) == [1, 3]
        assert sorted(tags["strong_support"]) == []
        assert sorted(tags["internal"]) == [2]

    def test_reduced_star_center_is_support(self):
        from iocodes import gen_reduced_subdivided_star

        g, spec = gen_reduced_subdivided_star(4)
        tags = classify_vertices(g)
        assert spec.distinguished["center"] in tags["support"]

    def test_claw_center_strong(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert sorted(classify_vertices(g)["strong_support"]) == [0]

    def test_p2_overlap(self):
        tags = classify_vertices(path(2))
        assert sorted(tags["leaf"]) == [0, 1]
        assert sorted(tags["support"]) == [0, 1]


class TestDiameterAndLongestPath:
    def test_star_diameter(self):
        g, _ = gen_subdivided_star(4)
        assert diameter(g) == 4

    def test_path_diameter(self):
        for n in range(2, 8):
            assert diameter(path(n)) == n - 1

    def test_tight_pair_diameter(self):
        # oracle: all-pairs shortest paths on the generated instance
        g, _ = gen_tight_tree_pair(3)
        dist = brute_all_distances(g)
        assert max(max(row) for row in dist) == 7
        assert diameter(g) == 7

    def test_disconnected_raises(self):
        with pytest.raises(Disconnected):
            diameter(Graph(3, [(0, 1)]))

    def test_longest_path_realizes_diameter(self, rng):
        from iocodes import enumerate_trees

        for n in range(2, 13):
            for t in enumerate_trees(n):
                p = longest_path_in_tree(t)
                assert len(p) - 1 == diameter(t)
                for a, b in zip(p, p[1:]):
                    assert t.has_edge(a, b)
        for _ in range(200):
            t = random_tree(rng.randint(13, 16), rng)
            assert len(longest_path_in_tree(t)) - 1 == diameter(t)

    def test_lowest_endpoint_tie_break(self):
        p = longest_path_in_tree(path(5))
        assert p == [0, 1, 2, 3, 4]

    def test_cyclic_raises(self):
        with pytest.raises(NotATree):
            longest_path_in_tree(cycle(4))

    def test_tree_path(self):
        assert tree_path(path(5), 4, 1) == [4, 3, 2, 1]


class TestDeletion:
    def test_cycle_minus_edge_is_path(self):
        g = delete_edge(cycle(5), (0, 4))
        assert g.edge_count == 4
        assert diameter(g) == 4

    def test_paw_minus_leaf_is_triangle(self):
        g, new_to_old, old_to_new = delete_vertex(PAW, 3)
        assert g.n == 3 and g.edge_count == 3
        assert new_to_old == [0, 1, 2]
        assert old_to_new == {0: 0, 1: 1, 2: 2}

    def test_missing_edge(self):
        with pytest.raises(NotPresent):
            delete_edge(path(3), (0, 2))

    def test_missing_vertex(self):
        with pytest.raises(NotPresent):
            delete_vertex(path(3), 7)

    def test_gadget_minus_cycle_edge_hits_bound(self):
        # deleting one ring edge yields a tree with minimum exactly 5/6 of n
        from iocodes import solve

        g, spec = gen_subcubic_gp(3)
        ring = spec.distinguished["cycle"]
        t = delete_edge(g, (ring[0], ring[-1]))
        assert t.edge_count == t.n - 1
        assert 6 * solve(t).gamma == 5 * t.n

    def test_original_untouched(self):
        g = path(4)
        delete_edge(g, (1, 2))
        delete_vertex(g, 0)
        assert g.edge_count == 3 and g.n == 4


class TestInducedCycle:
    def test_tree_none(self, rng):
        assert find_induced_cycle(random_tree(9, rng)) is None

    def test_c5_whole(self):
        assert find_induced_cycle(cycle(5)) == [0, 1, 2, 3, 4]

    def test_gadget_ring(self):
        for p in (3, 5):
            g, spec = gen_subcubic_gp(p)
            found = find_induced_cycle(g)
            assert sorted(found) == sorted(spec.distinguished["cycle"])
            assert len(found) == p

    def test_returned_cycle_is_chordless(self, rng):
        for _ in range(80):
            g = random_graph(rng.randint(4, 10), rng.uniform(0.2, 0.6), rng)
            c = find_induced_cycle(g)
            if c is None:
                continue
            k = len(c)
            assert k >= 3
            for i in range(k):
                for j in range(i + 1, k):
                    adjacent = g.has_edge(c[i], c[j])
                    consecutive = j - i == 1 or (i == 0 and j == k - 1)
                    assert adjacent == consecutive


class TestVertexSet:
    def test_operations_exact(self):
        a = VertexSet(6, [0, 2, 4])
        b = VertexSet(6, [2, 3])
        assert sorted(a | b) == [0, 2, 3, 4]
        assert sorted(a & b) == [2]
        assert sorted(a - b) == [0, 4]
        assert VertexSet(6, [4, 0, 2]) == a
        assert len(a) == 3 and 2 in a and 1 not in a

    def test_universe_checked(self):
        with pytest.raises(InvalidVertex):
            VertexSet(3, [5])
        from iocodes import UniverseMismatch

        with pytest.raises(UniverseMismatch):
            VertexSet(3, [1]) | VertexSet(4, [1])
