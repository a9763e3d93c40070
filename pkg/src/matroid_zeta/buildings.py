"""Building sets inside a lattice of flats, and their nested-set complexes.

A building set is a family of flats above the bottom such that every lower
interval [bottom, X] factors, as a poset, into the product of the intervals
below the maximal members of the family under X (the factors of X).  A
subset of a building set is nested when the join of every pairwise
incomparable subfamily of size >= 2 lands outside the building set.

Validation checks the defining product decomposition exhaustively, so a
validated BuildingSet is trustworthy by construction.
"""

from __future__ import annotations

import itertools
import random

from .errors import ParseError


class BuildingSet:
    """A validated building set, plus its factor table and nested sets."""

    __slots__ = ("lattice", "members", "_member_set", "_factors",
                 "_incomparable", "_nested", "_nested_set")

    def __init__(self, lattice, members, validate=True):
        self.lattice = lattice
        members = tuple(sorted(set(members)))
        if any(i == lattice.bottom or not 0 <= i < len(lattice.flats)
               for i in members):
            raise ParseError("building-set members must be flats above the bottom")
        self.members = members
        self._member_set = frozenset(members)
        self._factors = None
        self._incomparable = None
        self._nested = None
        self._nested_set = None
        if validate and not self.is_valid():
            raise ParseError("candidate family is not a building set")

    @classmethod
    def maximal(cls, lattice):
        """All flats above the bottom."""
        return cls(lattice, lattice.nonminimal_indices, validate=False)

    @classmethod
    def minimal(cls, lattice):
        """Flats whose lower interval minor is connected of positive rank.

        The interval minor contracts the bottom flat, so loops never make
        a flat count as disconnected.
        """
        members = [i for i in lattice.nonminimal_indices
                   if lattice.interval_minor(lattice.bottom, i).is_connected()]
        return cls(lattice, members, validate=False)

    @classmethod
    def from_flats(cls, lattice, flats):
        """Build from explicit flats (as element collections); validates."""
        indices = []
        for f in flats:
            key = frozenset(int(e) for e in f)
            if key not in lattice.index:
                raise ParseError(f"{sorted(key)} is not a flat")
            indices.append(lattice.index[key])
        return cls(lattice, indices, validate=True)

    def factors(self, x):
        """Maximal members weakly below flat x."""
        if self._factors is None:
            self._compute_factors()
        return self._factors[x]

    @property
    def fact_top(self):
        return self.factors(self.lattice.top)

    def _compute_factors(self):
        lat = self.lattice
        table = {}
        for x in range(len(lat.flats)):
            if x == lat.bottom:
                table[x] = frozenset()
                continue
            inside = [g for g in self.members if lat.leq(g, x)]
            table[x] = frozenset(
                g for g in inside
                if not any(h != g and lat.leq(g, h) for h in inside))
        self._factors = table

    def is_valid(self):
        """Check the product decomposition of every lower interval."""
        lat = self.lattice
        for x in range(len(lat.flats)):
            if x == lat.bottom:
                continue
            factors = sorted(self.factors(x))
            interval = [i for i in range(len(lat.flats))
                        if lat.leq(i, x)]
            legs = [[i for i in interval if lat.leq(i, g)] for g in factors]
            size = 1
            for leg in legs:
                size *= len(leg)
            if size != len(interval):
                return False
            images = []
            for combo in itertools.product(*legs):
                images.append((combo, lat.join_many(combo)))
            if len({img for _, img in images}) != len(interval):
                return False
            for slot, g in enumerate(factors):
                unit = tuple(g if k == slot else lat.bottom
                             for k in range(len(factors)))
                if lat.join_many(unit) != g:
                    return False
            for (t1, im1), (t2, im2) in itertools.combinations(images, 2):
                le12 = all(lat.leq(a, b) for a, b in zip(t1, t2))
                le21 = all(lat.leq(b, a) for a, b in zip(t1, t2))
                if le12 != lat.leq(im1, im2) or le21 != lat.leq(im2, im1):
                    return False
        return True

    def contains_minimal(self):
        """Sanity: every connected positive-rank restriction flat is a member."""
        return set(BuildingSet.minimal(self.lattice).members) <= set(self.members)

    def _pairwise(self):
        if self._incomparable is None:
            lat = self.lattice
            inc = {}
            for g, h in itertools.combinations(self.members, 2):
                if not lat.leq(g, h) and not lat.leq(h, g):
                    inc.setdefault(g, set()).add(h)
                    inc.setdefault(h, set()).add(g)
            self._incomparable = inc
        return self._incomparable

    def _extension_allowed(self, current, candidate):
        """Would current + candidate still be nested?"""
        lat = self.lattice
        inc = self._pairwise()
        others = [m for m in current if m in inc.get(candidate, ())]
        for size in range(1, len(others) + 1):
            for combo in itertools.combinations(others, size):
                ok = True
                for a, b in itertools.combinations(combo, 2):
                    if b not in inc.get(a, ()):
                        ok = False
                        break
                if not ok:
                    continue
                if lat.join_many(combo + (candidate,)) in self._member_set:
                    return False
        return True

    def nested_sets(self):
        """Every nested subset of the building set, as frozensets of flat indices."""
        if self._nested is None:
            out = [frozenset()]

            def extend(current, start):
                for pos in range(start, len(self.members)):
                    candidate = self.members[pos]
                    if self._extension_allowed(current, candidate):
                        nxt = current + (candidate,)
                        out.append(frozenset(nxt))
                        extend(nxt, pos + 1)

            extend((), 0)
            self._nested = tuple(out)
            self._nested_set = frozenset(out)
        return self._nested

    def is_nested(self, subset):
        self.nested_sets()
        return frozenset(subset) in self._nested_set

    def local_nested_sets(self):
        """Nested sets containing every factor of the top flat."""
        fact = self.fact_top
        return tuple(s for s in self.nested_sets() if fact <= s)

    def proper_nested_sets(self):
        """Nested sets missing at least one factor of the top flat."""
        fact = self.fact_top
        return tuple(s for s in self.nested_sets() if not fact <= s)

    def z_value(self, nested, member):
        """Join of the members of the nested set strictly below the given one."""
        lat = self.lattice
        smaller = [g for g in nested if g != member and lat.leq(g, member)]
        return lat.join_many(smaller)

    def z_map(self, nested):
        return {g: self.z_value(nested, g) for g in nested}

    def induced_restriction(self, x):
        """Building set on the lattice of M | F_x (members weakly below x)."""
        from .lattice import FlatLattice

        lat = self.lattice
        sub = lat.matroid.minor(restrict_to=lat.flats[x])
        sub_lat = FlatLattice(sub, force=True)
        local = {orig: pos for pos, orig in enumerate(sorted(lat.flats[x]))}
        mapped = []
        for g in self.members:
            if lat.leq(g, x) and g != lat.bottom:
                mapped.append(sub_lat.index[
                    frozenset(local[e] for e in lat.flats[g])])
        return BuildingSet(sub_lat, mapped, validate=True), sub, sub_lat

    def induced_contraction(self, x):
        """Building set on the lattice of M / F_x (joins of outside members)."""
        from .lattice import FlatLattice

        lat = self.lattice
        quotient = lat.matroid.minor(contract_by=lat.flats[x])
        q_lat = FlatLattice(quotient, force=True)
        outside = sorted(lat.matroid.ground_set - lat.flats[x])
        local = {orig: pos for pos, orig in enumerate(outside)}
        mapped = set()
        for g in self.members:
            if not lat.leq(g, x):
                joined = lat.flats[lat.join(g, x)]
                mapped.add(q_lat.index[
                    frozenset(local[e] for e in joined - lat.flats[x])])
        return BuildingSet(q_lat, mapped, validate=True), quotient, q_lat

    def __repr__(self):
        return f"BuildingSet({len(self.members)} members)"


def sample_intermediate_building_sets(lattice, count=3, seed=0, attempts=200):
    """Validated building sets strictly between the minimal and maximal ones.

    Candidates take the minimal building set plus a random slice of the
    remaining flats; the validator filters.  Deterministic for a fixed seed.
    """
    minimal = BuildingSet.minimal(lattice)
    maximal = BuildingSet.maximal(lattice)
    optional = sorted(set(maximal.members) - set(minimal.members))
    rng = random.Random(seed)
    found = []
    seen = set()
    if not optional:
        return found
    for _ in range(attempts):
        if len(found) >= count:
            break
        k = rng.randint(1, max(len(optional) - 1, 1))
        extra = tuple(sorted(rng.sample(optional, min(k, len(optional)))))
        key = extra
        if key in seen or len(extra) == len(optional) or not extra:
            continue
        seen.add(key)
        candidate = tuple(sorted(set(minimal.members) | set(extra)))
        try:
            found.append(BuildingSet(lattice, candidate, validate=True))
        except ParseError:
            continue
    return found
