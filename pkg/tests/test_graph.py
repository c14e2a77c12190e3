import itertools
import random

import pytest

from thetaguide.graph import (
    DimacsError,
    DimacsWarning,
    Graph,
    brute_force_alpha,
    complement,
    edge_density,
    is_stable_set,
    load_weights,
    parse_dimacs,
    random_graph,
    write_dimacs,
    write_weights,
)


def cycle(n):
    return Graph(n=n, edges=frozenset((i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)))


def complete(n, weights=()):
    return Graph(n=n, edges=frozenset(itertools.combinations(range(n), 2)), weights=weights)


def empty(n):
    return Graph(n=n, edges=frozenset())


class TestParseDimacs:
    def test_minimal(self):
        g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
        assert g.n == 3
        assert g.m == 2
        assert g.edges == {(0, 1), (1, 2)}
        assert g.weights == (1.0, 1.0, 1.0)

    def test_duplicate_edges_collapse_with_warning(self):
        with pytest.warns(DimacsWarning):
            g = parse_dimacs("p edge 3 3\ne 1 2\ne 1 2\ne 2 3")
        assert g.m == 2

    def test_comments_and_blank_lines(self):
        g = parse_dimacs("c hello\n\np edge 2 1\nc mid\ne 2 1\n")
        assert g.edges == {(0, 1)}

    def test_reversed_edge_is_same_edge(self):
        with pytest.warns(DimacsWarning):
            g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1")
        assert g.m == 1

    def test_missing_problem_line(self):
        with pytest.raises(DimacsError):
            parse_dimacs("e 1 2")
        with pytest.raises(DimacsError):
            parse_dimacs("c only comments")

    def test_duplicate_problem_line(self):
        with pytest.raises(DimacsError):
            parse_dimacs("p edge 2 1\np edge 2 1\ne 1 2")

    def test_vertex_out_of_range(self):
        with pytest.raises(DimacsError):
            parse_dimacs("p edge 3 1\ne 1 4")

    def test_self_loop_rejected(self):
        with pytest.raises(DimacsError):
            parse_dimacs("p edge 3 1\ne 2 2")

    def test_m_mismatch_warns(self):
        with pytest.warns(DimacsWarning):
            g = parse_dimacs("p edge 3 5\ne 1 2")
        assert g.m == 1

    def test_roundtrip(self):
        g = random_graph(17, 0.4, seed=3)
        assert parse_dimacs(write_dimacs(g, name="r17")).edges == g.edges


class TestWeights:
    def test_load(self):
        g = empty(2)
        g2 = load_weights(g, "1 5\n2 7")
        assert g2.weights == (5.0, 7.0)

    def test_unlisted_default_to_one(self):
        g2 = load_weights(empty(3), "2 0")
        assert g2.weights == (1.0, 0.0, 1.0)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            load_weights(empty(2), "3 1")

    def test_negative(self):
        with pytest.raises(ValueError):
            load_weights(empty(2), "1 -2")

    def test_roundtrip(self):
        g = random_graph(9, 0.3, weighted=True, seed=5)
        assert load_weights(g, write_weights(g)).weights == g.weights


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete(4)).m == 0

    def test_empty_to_complete(self):
        assert complement(empty(3)).edges == complete(3).edges

    def test_involution_and_edge_count(self):
        for seed in range(5):
            g = random_graph(12, 0.35, seed=seed)
            cg = complement(g)
            assert complement(cg).edges == g.edges
            assert g.m + cg.m == 12 * 11 // 2

    def test_preserves_weights(self):
        g = random_graph(6, 0.5, weighted=True, seed=1)
        assert complement(g).weights == g.weights


class TestEdgeDensity:
    def test_paper_shape(self):
        g = random_graph(50, 70 / 1225, seed=0)
        assert g.m == 70
        d = edge_density(g)
        assert d == pytest.approx(0.0571, abs=1e-3)
        assert round(float(d), 2) == 0.06

    def test_extremes(self):
        assert edge_density(complete(5)) == 1
        assert edge_density(empty(4)) == 0

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            edge_density(empty(1))


class TestRandomGraph:
    def test_density_zero_and_one(self):
        assert random_graph(10, 0.0, seed=7).m == 0
        assert random_graph(10, 1.0, seed=7).edges == complete(10).edges

    def test_exact_edge_count(self):
        g = random_graph(50, 0.0571, seed=11)
        assert g.m == round(0.0571 * 1225)

    def test_deterministic(self):
        a = random_graph(20, 0.3, weighted=True, seed=42)
        b = random_graph(20, 0.3, weighted=True, seed=42)
        assert a.edges == b.edges
        assert a.weights == b.weights

    def test_seed_changes_graph(self):
        a = random_graph(20, 0.3, seed=0)
        b = random_graph(20, 0.3, seed=1)
        assert a.edges != b.edges

    def test_weight_range(self):
        g = random_graph(30, 0.2, weighted=True, seed=9)
        assert all(1 <= w <= 100 and w == int(w) for w in g.weights)


class TestBruteForce:
    def test_cycle5(self):
        assert brute_force_alpha(cycle(5)).value == 2

    def test_empty(self):
        res = brute_force_alpha(empty(6))
        assert res.value == 6
        assert res.members == frozenset(range(6))

    def test_complete_weighted(self):
        g = complete(5, weights=(1.0, 2.0, 3.0, 4.0, 5.0))
        res = brute_force_alpha(g)
        assert res.value == 5
        assert res.members == {4}

    def test_guard(self):
        with pytest.raises(ValueError):
            brute_force_alpha(empty(26))

    def test_members_always_stable(self):
        for seed in range(8):
            g = random_graph(14, 0.1 + 0.1 * seed, weighted=seed % 2 == 1, seed=seed)
            res = brute_force_alpha(g)
            assert is_stable_set(g, res.members)
            assert res.value == pytest.approx(g.total_weight(res.members))

    def test_alpha_equals_omega_of_complement(self):
        # independent clique enumeration on the complement as a second oracle
        rng = random.Random(123)
        for _ in range(6):
            n = rng.randint(4, 11)
            g = random_graph(n, rng.random(), seed=rng.randint(0, 999))
            cg = complement(g)
            best = 0
            for r in range(n + 1):
                for sub in itertools.combinations(range(n), r):
                    if all(cg.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                        best = max(best, len(sub))
            assert brute_force_alpha(g).value == best
