"""Basis-list matroids: rank, closure, minors, sums, and weight selection."""

import itertools
import random

import pytest

from matroid_zeta import EmptyGroundSet, Matroid, ParseError, named_matroid


def brute_max_weight(m, weights):
    return max(sum(weights[e] for e in b) for b in m.bases)


class TestConstruction:
    def test_uniform_counts(self):
        m = Matroid.uniform(2, 4)
        assert m.n == 4 and m.full_rank == 2
        assert len(m.bases) == 6

    def test_rank_zero_uniform_is_all_loops(self):
        m = Matroid.uniform(0, 3)
        assert m.bases == (frozenset(),)
        assert sorted(m.loops()) == [0, 1, 2]
        assert not m.is_loopless

    def test_graphic_k4(self):
        k4 = Matroid.graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert k4.n == 6 and k4.full_rank == 3
        assert len(k4.bases) == 16

    def test_named_matches_graphic(self):
        direct = Matroid.graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                  (2, 3)])
        assert set(named_matroid("k4").bases) == set(direct.bases)

    def test_empty_ground_set(self):
        with pytest.raises(EmptyGroundSet):
            Matroid(0, [[]])
        with pytest.raises(EmptyGroundSet):
            Matroid.uniform(0, 0)

    def test_axiom_violations(self):
        with pytest.raises(ParseError):
            Matroid(4, [[0, 1], [2, 3]])
        with pytest.raises(ParseError):
            Matroid(3, [[0], [1, 2]])
        with pytest.raises(ParseError):
            Matroid(2, [])
        with pytest.raises(ParseError):
            Matroid(2, [[0, 5]])


class TestRankClosure:
    def test_rank_examples(self):
        m = Matroid.uniform(2, 3)
        assert m.rank(frozenset()) == 0
        assert m.rank({0}) == 1
        assert m.rank({0, 1}) == 2
        assert m.rank({0, 1, 2}) == 2

    def test_rank_submodular_and_monotone(self, u23, k4):
        for m in (u23, k4):
            subsets = [frozenset(s) for r in range(m.n + 1)
                       for s in itertools.combinations(range(m.n), r)]
            if m.n > 4:
                subsets = subsets[::3]
            for a in subsets:
                for b in subsets:
                    ra, rb = m.rank(a), m.rank(b)
                    assert m.rank(a | b) + m.rank(a & b) <= ra + rb
                    if a <= b:
                        assert ra <= rb
                assert m.rank(a) <= len(a)

    def test_closure(self):
        m = Matroid.uniform(2, 3)
        assert m.closure({0}) == frozenset({0})
        assert m.closure({0, 1}) == frozenset({0, 1, 2})
        assert m.closure(frozenset()) == frozenset()

    def test_closure_is_idempotent_and_extensive(self, k4):
        for r in range(3):
            for s in itertools.combinations(range(k4.n), r):
                c = k4.closure(s)
                assert set(s) <= c
                assert k4.closure(c) == c
                assert k4.rank(c) == k4.rank(set(s))

    def test_is_independent(self):
        m = Matroid.uniform(2, 3)
        assert m.is_independent({0})
        assert m.is_independent({1, 2})
        assert not m.is_independent({0, 1, 2})


class TestMinorsAndSums:
    def test_restriction_keeps_original_labels(self):
        r = Matroid.uniform(2, 4).minor(restrict_to={1, 2, 3})
        assert r.labels == (1, 2, 3)
        assert len(r.bases) == 3

    def test_contraction(self):
        c = Matroid.uniform(2, 4).minor(contract_by={0})
        assert c.labels == (1, 2, 3)
        assert c.full_rank == 1
        assert sorted(map(sorted, c.bases)) == [[0], [1], [2]]

    def test_contract_then_restrict(self):
        k4 = named_matroid("k4")
        tri = k4.closure({0, 1})
        mm = k4.minor(restrict_to=tri)
        assert mm.full_rank == 2 and mm.n == 3

    def test_contraction_rank_identity(self, k4):
        for r in range(1, 3):
            for s in itertools.combinations(range(k4.n), r):
                c = k4.minor(contract_by=set(s))
                assert c.full_rank == k4.full_rank - k4.rank(set(s))

    def test_direct_sum_relabels_second_summand(self):
        m = Matroid.uniform(2, 3).direct_sum(Matroid.uniform(1, 2))
        assert m.n == 5 and m.full_rank == 3
        assert len(m.bases) == 3 * 2
        assert m.labels == (0, 1, 2, 3, 4)

    def test_direct_sum_is_disconnected(self):
        m = Matroid.uniform(2, 3).direct_sum(Matroid.uniform(1, 1))
        assert not m.is_connected()
        assert Matroid.uniform(2, 3).is_connected()
        assert not Matroid.uniform(2, 2).is_connected()

    def test_circuits(self):
        m = Matroid.uniform(2, 3)
        assert sorted(map(sorted, m.circuits())) == [[0, 1, 2]]
        loopy = Matroid(2, [[0]])
        assert sorted(map(sorted, loopy.circuits())) == [[1]]


class TestWeights:
    def test_max_weight_basis_example(self):
        m = Matroid.uniform(2, 3)
        basis, weight = m.max_weight_basis((5, 1, 1))
        assert weight == 6
        assert basis in (frozenset({0, 1}), frozenset({0, 2}))
        assert m.weight((5, 1, 1)) == 6

    def test_greedy_matches_brute_force(self, corpus):
        rng = random.Random(7)
        for name in ("u23", "u24", "k4", "N1"):
            m = corpus[name]
            for _ in range(6):
                w = tuple(rng.randint(-4, 9) for _ in range(m.n))
                assert m.weight(w) == brute_max_weight(m, w)

    def test_initial_matroid_examples(self):
        m = Matroid.uniform(2, 3)
        one_heavy = m.initial_matroid((1, 0, 0))
        assert sorted(map(sorted, one_heavy.bases)) == [[0, 1], [0, 2]]
        assert one_heavy.labels == (0, 1, 2)
        two_heavy = m.initial_matroid((1, 1, 0))
        assert sorted(map(sorted, two_heavy.bases)) == [[0, 1]]
        assert not two_heavy.is_loopless

    def test_initial_matroid_zero_weight_is_identity(self, corpus):
        for name in ("u23", "k4"):
            m = corpus[name]
            assert m.initial_matroid((0,) * m.n).bases == m.bases

    def test_initial_matroid_shift_invariance(self):
        m = named_matroid("k4")
        rng = random.Random(3)
        w = tuple(rng.randint(0, 4) for _ in range(m.n))
        base = m.initial_matroid(w).bases
        for lam in range(-3, 4):
            shifted = tuple(x + lam for x in w)
            assert m.initial_matroid(shifted).bases == base

    def test_initial_matroid_is_valid_matroid(self, corpus):
        rng = random.Random(11)
        for name in ("u24", "k4", "fano"):
            m = corpus[name]
            for _ in range(5):
                w = tuple(rng.randint(0, 3) for _ in range(m.n))
                init = m.initial_matroid(w)
                Matroid(init.n, [sorted(b) for b in init.bases])

    def test_loopless_initial_iff_level_sets_are_flats(self, corpus):
        """Upper level sets of the weight vector detect loops of the
        weight-selected matroid: every nonempty one must be closed."""
        rng = random.Random(23)
        for name in ("u23", "u24", "k4"):
            m = corpus[name]
            for _ in range(12):
                w = tuple(rng.randint(0, 3) for _ in range(m.n))
                init = m.initial_matroid(w)
                levels = sorted(set(w))
                level_sets_closed = all(
                    m.closure(s) == s
                    for c in levels
                    if (s := frozenset(e for e in range(m.n) if w[e] >= c)))
                assert init.is_loopless == level_sets_closed, (name, w)

    def test_basis_weights_parallel_to_bases(self):
        m = Matroid.uniform(2, 3)
        table = m.basis_weights((5, 1, 1))
        assert len(table) == len(m.bases)
        assert sorted(table) == [2, 6, 6]
        assert max(table) == m.weight((5, 1, 1))
        for b, wt in zip(m.bases, table):
            assert wt == 5 * (0 in b) + (1 in b) + (2 in b)
