from math import gcd, lcm

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from harmolight.dynamics import brute_digraph, oracle_loop_ensemble
from harmolight.gf2 import BitMatrix
from harmolight.graphs import Graph, harmonic_matrix
from harmolight.loops import (
    InconsistentEnsemble,
    LoopEnsemble,
    divisors,
    fixed_dims,
    funny_div,
    inclusion_exclusion_terms,
    loop_ensemble,
    loop_product,
    moebius,
    moebius_terms,
    q_hat,
    render_terms,
    star,
)
from harmolight.monoid import monoid_profile
from oracles import all_labeled_graphs, np_rng, random_graph_edges, walk_cycles

E = LoopEnsemble.from_mapping

ensembles = st.dictionaries(st.integers(1, 24), st.integers(1, 5), max_size=4).map(E)


def _loops(g):
    a = harmonic_matrix(g)
    p = monoid_profile(a)
    fixed = fixed_dims(a, p.period_m)
    return p, fixed, loop_ensemble(fixed, p.period_m)


class TestMoebius:
    def test_examples(self):
        assert moebius(1) == 1
        assert moebius(6) == 1
        assert moebius(4) == 0

    def test_matches_sympy(self):
        for d in range(1, 500):
            assert moebius(d) == int(sympy.mobius(d))

    def test_divisor_sum_vanishes(self):
        for n in range(1, 300):
            assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            moebius(0)


class TestFixedDims:
    def test_empty_graph(self):
        assert fixed_dims(BitMatrix.zeros(3), 1) == {1: 0}

    def test_k3(self):
        assert fixed_dims(harmonic_matrix(Graph.complete(3)), 1) == {1: 2}

    def test_p3(self):
        assert fixed_dims(harmonic_matrix(Graph.path(3)), 2) == {1: 1, 2: 2}


class TestLoopEnsemble:
    def test_k3(self):
        assert _loops(Graph.complete(3))[2] == E({1: 4})

    def test_p3(self):
        assert _loops(Graph.path(3))[2] == E({1: 2, 2: 1})

    def test_inexact_division_aborts(self):
        with pytest.raises(InconsistentEnsemble):
            loop_ensemble({1: 0, 2: 2}, 2)  # (4 - 1) / 2

    def test_render_and_parse(self):
        e = E({1: 2, 2: 1})
        assert e.render() == "2L1 + L2"
        assert LoopEnsemble.parse("2L1 + L2") == e
        assert E({1: 1}).render() == "L1"

    def test_symbolic_expansion_60(self):
        # 60 has maximal proper divisors 30, 20, 12
        assert render_terms(moebius_terms(60)) == "F60 - F30 - F20 - F12 + F10 + F6 + F4 - F2"

    def test_symbolic_expansion_30(self):
        # maximal proper divisors 15, 10, 6; the down-set of 6 cannot be left out
        assert render_terms(moebius_terms(30)) == "F30 - F15 - F10 - F6 + F5 + F3 + F2 - F1"

    def test_four_term_30_expansion_miscounts(self):
        # one fixed point plus one 6-cycle: no state has exact period 30,
        # yet F30 - F10 - F15 + F5 keeps the 6-cycle in F30 only
        e = {1: 1, 6: 1}
        F = {d: sum(i * c for i, c in e.items() if d % i == 0) for d in (30, 15, 10, 5)}
        assert F[30] - F[10] - F[15] + F[5] == 6
        assert sum(c * (1 + 6 * (i % 6 == 0)) for c, i in moebius_terms(30)) == 0

    def test_lattice_route_matches_moebius_route(self):
        for p in range(1, 400):
            assert inclusion_exclusion_terms(p) == moebius_terms(p)

    def test_expansion_counts_states_of_exact_period(self):
        rng = np_rng(30)
        for _ in range(200):
            e = {int(i): int(rng.integers(1, 4)) for i in rng.integers(1, 61, size=4)}
            F = {d: sum(i * c for i, c in e.items() if d % i == 0) for d in range(1, 61)}
            for p in range(1, 61):
                total = sum(c * F[i] for c, i in moebius_terms(p))
                assert total == p * e.get(p, 0)

    def test_partition_and_divisor_identities_exhaustive(self):
        for n in range(1, 7):
            for _, edges in all_labeled_graphs(n):
                p, fixed, e = _loops(Graph(n, frozenset(edges)))
                assert e.n_states == 2**p.dim_L
                assert e.max_length == p.period_m
                for length in e:
                    assert p.period_m % length == 0
                    assert sum(i * e.get(i) for i in divisors(length)) == 2 ** fixed[length]

    def test_oracle_agreement_exhaustive(self):
        for n in range(1, 6):
            for _, edges in all_labeled_graphs(n):
                g = Graph(n, frozenset(edges))
                lengths, _, _ = walk_cycles(n, edges)
                oracle = E({length: lengths.count(length) for length in set(lengths)})
                assert _loops(g)[2] == oracle

    def test_oracle_agreement_random(self):
        rng = np_rng(31)
        for _ in range(100):
            n = int(rng.integers(6, 11))
            g = Graph(n, frozenset(random_graph_edges(rng, n)))
            assert _loops(g)[2] == oracle_loop_ensemble(brute_digraph(g))


class TestFunnyDivision:
    def test_table(self):
        assert [funny_div(6, b) for b in range(1, 7)] == [6, 3, 2, 3, 6, 1]

    def test_unit(self):
        assert funny_div(17, 1) == 17

    def test_is_lcm_over_b(self):
        for a in range(1, 40):
            for b in range(1, 40):
                assert funny_div(a, b) == lcm(a, b) // b

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            funny_div(0, 3)


class TestLoopAlgebra:
    def test_unit(self):
        assert loop_product(E({1: 1}), E({3: 2, 4: 1})) == E({3: 2, 4: 1})

    def test_coprime(self):
        assert loop_product(E({2: 1}), E({3: 1})) == E({6: 1})

    def test_common_factor(self):
        assert loop_product(E({6: 1}), E({4: 1})) == E({12: 2})

    @given(ensembles, ensembles)
    def test_commutative(self, a, b):
        assert a * b == b * a

    @given(ensembles, ensembles, ensembles)
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(ensembles, ensembles, ensembles)
    def test_distributive(self, a, b, c):
        assert (a + b) * c == a * c + b * c

    @given(ensembles)
    def test_unit_law(self, a):
        assert E({1: 1}) * a == a

    @given(ensembles, ensembles)
    def test_state_count_multiplies(self, a, b):
        assert (a * b).n_states == a.n_states * b.n_states


class TestQHat:
    def test_hexagon_four_step(self):
        assert q_hat(4, E({6: 1})) == E({3: 2})

    @given(ensembles)
    def test_identity(self, e):
        assert q_hat(1, e) == e

    def test_square_of_p3(self):
        assert q_hat(2, E({1: 2, 2: 1})) == E({1: 4})

    @given(st.integers(1, 12), st.integers(1, 12), ensembles)
    def test_representation_of_multiplication(self, a, b, e):
        assert q_hat(a, q_hat(b, e)) == q_hat(a * b, e)

    @given(st.integers(1, 12), ensembles)
    def test_preserves_state_count(self, q, e):
        assert q_hat(q, e).n_states == e.n_states

    @pytest.mark.parametrize("i", range(1, 41))
    def test_star_and_hat_do_not_commute(self, i):
        one = E({i: 1})
        star_after_hat = star(2, q_hat(2, one))
        hat_after_star = q_hat(2, star(2, one))
        if i % 2:
            assert star_after_hat == E({2 * i: 1})
            assert hat_after_star == E({i: 2})
        elif i % 4 == 2:
            assert star_after_hat == E({i: 2})
            assert hat_after_star == E({i // 2: 4})
        else:
            assert star_after_hat == E({i // 2: 4})
            assert hat_after_star == E({i // 2: 4})

    def test_gcd_weight(self):
        for a in range(1, 30):
            for q in range(1, 30):
                assert q_hat(q, E({a: 1})) == E({a // gcd(a, q): gcd(a, q)})
