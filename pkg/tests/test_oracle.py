"""Brute-force reference computations used to pin down the engine."""

import pytest

from matroid_zeta import (FlatLattice, LaurentPoly, Matroid, TooLarge,
                          char_poly_whitney, collapse, motivic_zeta,
                          named_matroid, truncated_zeta_sum)
from matroid_zeta.oracle import (ORACLE_ORDER_LIMIT, ORACLE_SIZE_LIMIT,
                                 WHITNEY_SIZE_LIMIT)


class TestWhitney:
    def test_u12(self):
        assert char_poly_whitney(Matroid.uniform(1, 2)) == \
            LaurentPoly({1: 1, 0: -1})

    def test_loops_give_zero(self):
        assert char_poly_whitney(Matroid(2, [[0]])).is_zero

    def test_matches_lattice_on_corpus(self, corpus):
        for name, m in corpus.items():
            if m.n > WHITNEY_SIZE_LIMIT:
                continue
            assert char_poly_whitney(m) == FlatLattice(m).char_poly(), name

    def test_size_guard(self):
        big = Matroid.uniform(1, WHITNEY_SIZE_LIMIT + 1)
        with pytest.raises(TooLarge):
            char_poly_whitney(big)
        assert char_poly_whitney(big, force=True) == \
            LaurentPoly({1: 1, 0: -1})


class TestTruncatedSums:
    def test_u12_frozen_values(self):
        m = Matroid.uniform(1, 2)
        q = LaurentPoly.q_power
        assert truncated_zeta_sum(m, "full", 2) == [
            LaurentPoly({0: 1, -1: -1}), LaurentPoly.zero(),
            LaurentPoly({-1: 1, -2: -1})]
        assert truncated_zeta_sum(m, "local", 2) == [
            LaurentPoly.zero(), LaurentPoly.zero(),
            LaurentPoly({-1: 1, -2: -1})]
        assert truncated_zeta_sum(m, "reduced", 2) == [
            LaurentPoly.one(), LaurentPoly.zero(), LaurentPoly.zero()]

    def test_loops_vanish(self):
        loopy = Matroid(2, [[0]])
        for kind in ("full", "local", "reduced"):
            assert truncated_zeta_sum(loopy, kind, 3) == \
                [LaurentPoly.zero()] * 4

    def test_leading_coefficients(self, corpus):
        for name in ("u23", "u13", "u34"):
            m = corpus[name]
            lat = FlatLattice(m)
            rk = m.full_rank
            full = truncated_zeta_sum(m, "full", 0)
            assert full[0] == lat.char_poly().shift(-rk)
            red = truncated_zeta_sum(m, "reduced", 0)
            assert red[0] == lat.reduced_char_poly().shift(-(rk - 1))
            local = truncated_zeta_sum(m, "local", m.n - 1)
            assert all(c.is_zero for c in local)

    def test_engine_agrees_with_oracle(self, corpus):
        for name in ("u23", "u24", "u33", "k4", "fano"):
            m = corpus[name]
            order = 5
            for kind in ("full", "local", "reduced"):
                rational = collapse(motivic_zeta(m, kind=kind))
                assert rational.series_coefficients(order) == \
                    truncated_zeta_sum(m, kind, order), (name, kind)

    def test_deterministic(self):
        m = named_matroid("k4")
        assert truncated_zeta_sum(m, "full", 3) == \
            truncated_zeta_sum(m, "full", 3)

    def test_guards(self):
        small = Matroid.uniform(1, 2)
        with pytest.raises(TooLarge):
            truncated_zeta_sum(Matroid.uniform(2, ORACLE_SIZE_LIMIT + 1),
                               "full", 1)
        with pytest.raises(TooLarge):
            truncated_zeta_sum(small, "full", ORACLE_ORDER_LIMIT + 1)
        forced = truncated_zeta_sum(small, "full", ORACLE_ORDER_LIMIT + 1,
                                    force=True)
        assert len(forced) == ORACLE_ORDER_LIMIT + 2
