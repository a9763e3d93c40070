"""Building sets on flat lattices and their nested-set complexes."""

import itertools

import pytest

from matroid_zeta import (BuildingSet, FlatLattice, Matroid, ParseError,
                          named_matroid, sample_intermediate_building_sets)


def chains(lattice, pool):
    """All subsets of pool that are totally ordered in the lattice."""
    out = []
    for r in range(len(pool) + 1):
        for s in itertools.combinations(pool, r):
            if all(lattice.leq(a, b) or lattice.leq(b, a)
                   for a, b in itertools.combinations(s, 2)):
                out.append(frozenset(s))
    return set(out)


class TestExtremes:
    def test_u23_min_equals_max(self):
        lat = FlatLattice(Matroid.uniform(2, 3))
        assert set(BuildingSet.maximal(lat).members) == \
            set(BuildingSet.minimal(lat).members) == {1, 2, 3, 4}

    def test_u22_min_is_atoms(self):
        lat = FlatLattice(Matroid.uniform(2, 2))
        assert set(BuildingSet.minimal(lat).members) == set(lat.atoms)
        assert set(BuildingSet.maximal(lat).members) == \
            set(lat.nonminimal_indices)

    def test_k4_min_drops_disconnected_flats(self):
        lat = FlatLattice(named_matroid("k4"))
        gmin = BuildingSet.minimal(lat)
        assert len(BuildingSet.maximal(lat).members) == 14
        assert len(gmin.members) == 11
        missing = set(lat.nonminimal_indices) - set(gmin.members)
        for i in missing:
            assert lat.rank_of[i] == 2 and len(lat.flats[i]) == 2

    def test_min_ignores_loops(self):
        loopy = Matroid(3, [[0, 1]]).direct_sum(Matroid(1, [[]]))
        lat = FlatLattice(loopy)
        gmin = BuildingSet.minimal(lat)
        assert gmin.is_valid()
        assert all(lat.rank_of[i] >= 1 for i in gmin.members)

    def test_validation(self):
        lat = FlatLattice(Matroid.uniform(2, 3))
        with pytest.raises(ParseError):
            BuildingSet(lat, [1, 2, 3])
        assert not BuildingSet(lat, [1, 2, 3], validate=False).is_valid()
        assert BuildingSet.maximal(lat).is_valid()
        assert BuildingSet.minimal(lat).is_valid()
        assert BuildingSet.maximal(lat).contains_minimal()

    def test_from_flats(self):
        lat = FlatLattice(Matroid.uniform(2, 3))
        b = BuildingSet.from_flats(lat, [[0], [1], [2], [0, 1, 2]])
        assert set(b.members) == {1, 2, 3, 4}
        with pytest.raises(ParseError):
            BuildingSet.from_flats(lat, [[0], [1]])


class TestFactorization:
    def test_factor_ranks_sum(self):
        lat = FlatLattice(named_matroid("k4"))
        for b in (BuildingSet.maximal(lat), BuildingSet.minimal(lat)):
            for x in lat.nonminimal_indices:
                parts = b.factors(x)
                assert all(p in b.members for p in parts)
                assert lat.join_many(parts) == x
                assert sum(lat.rank_of[p] for p in parts) == lat.rank_of[x]

    def test_direct_sum_top_factors(self):
        ds = Matroid.uniform(2, 3).direct_sum(Matroid.uniform(1, 1))
        lat = FlatLattice(ds)
        gmin = BuildingSet.minimal(lat)
        tops = sorted(sorted(lat.flats[i]) for i in gmin.fact_top)
        assert tops == [[0, 1, 2], [3]]
        gmax = BuildingSet.maximal(lat)
        assert [sorted(lat.flats[i]) for i in gmax.fact_top] == [[0, 1, 2, 3]]


class TestNestedSets:
    def test_maximal_nested_sets_are_chains(self):
        for m in (Matroid.uniform(2, 3), Matroid.uniform(3, 4),
                  named_matroid("k4")):
            lat = FlatLattice(m)
            gmax = BuildingSet.maximal(lat)
            assert set(gmax.nested_sets()) == \
                chains(lat, lat.nonminimal_indices)

    def test_counts(self):
        lat23 = FlatLattice(Matroid.uniform(2, 3))
        assert len(BuildingSet.maximal(lat23).nested_sets()) == 8
        lat22 = FlatLattice(Matroid.uniform(2, 2))
        assert len(BuildingSet.minimal(lat22).nested_sets()) == 4

    def test_hereditary(self):
        lat = FlatLattice(named_matroid("k4"))
        gmin = BuildingSet.minimal(lat)
        for s in gmin.nested_sets():
            for r in range(len(s)):
                for sub in itertools.combinations(s, r):
                    assert gmin.is_nested(frozenset(sub))

    def test_local_plus_proper_partition(self):
        lat = FlatLattice(named_matroid("k4"))
        for b in (BuildingSet.maximal(lat), BuildingSet.minimal(lat)):
            every = set(b.nested_sets())
            local = set(b.local_nested_sets())
            proper = set(b.proper_nested_sets())
            assert local | proper == every
            assert not (local & proper)
            assert all(b.fact_top <= s for s in local)

    def test_z_map_example(self):
        lat = FlatLattice(Matroid.uniform(2, 3))
        gmax = BuildingSet.maximal(lat)
        s = frozenset({1, 4})
        assert gmax.z_map(s) == {1: lat.bottom, 4: 1}
        assert gmax.z_value(frozenset({1}), 4) == 1
        assert gmax.z_value(frozenset(), 4) == lat.bottom


class TestInduced:
    def test_induced_are_valid_building_sets(self):
        lat = FlatLattice(named_matroid("k4"))
        gmin = BuildingSet.minimal(lat)
        for x in lat.proper_indices:
            for sub_b, _, _ in (gmin.induced_restriction(x),
                                gmin.induced_contraction(x)):
                assert sub_b.is_valid()

    def test_induced_maximal_is_maximal_of_minor(self):
        lat = FlatLattice(named_matroid("k4"))
        gmax = BuildingSet.maximal(lat)
        for x in lat.proper_indices:
            for sub_b, _, sub_lat in (gmax.induced_restriction(x),
                                      gmax.induced_contraction(x)):
                assert set(sub_b.members) == \
                    set(BuildingSet.maximal(sub_lat).members)


class TestSampler:
    def test_between_extremes_distinct_and_valid(self):
        lat = FlatLattice(named_matroid("k4"))
        lo = set(BuildingSet.minimal(lat).members)
        hi = set(BuildingSet.maximal(lat).members)
        mids = sample_intermediate_building_sets(lat, count=3, seed=0)
        seen = {frozenset(b.members) for b in mids}
        assert len(mids) == 3 and len(seen) == 3
        for b in mids:
            assert b.is_valid()
            assert lo <= set(b.members) <= hi
            assert set(b.members) not in (lo, hi)

    def test_deterministic_for_seed(self):
        lat = FlatLattice(named_matroid("M1"))
        a = sample_intermediate_building_sets(lat, count=3, seed=5)
        b = sample_intermediate_building_sets(lat, count=3, seed=5)
        assert [sorted(x.members) for x in a] == \
            [sorted(x.members) for x in b]

    def test_rigid_lattice_yields_nothing(self):
        lat = FlatLattice(Matroid.uniform(2, 3))
        assert sample_intermediate_building_sets(lat, count=3, seed=0) == []
