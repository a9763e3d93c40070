"""The lattice of flats, its Moebius function, and characteristic polynomials.

Flats are enumerated bottom-up: the rank-(k+1) flats are the closures
cl(F + e) over rank-k flats F and elements e outside F.  The Moebius table
is filled eagerly at build time, so reads never mutate shared state.  The
characteristic polynomial of any minor between two nested flats comes from
the Moebius sum over that interval, which the zeta engine queries heavily.
"""

from __future__ import annotations

from .algebra import LaurentPoly, Q_MINUS_ONE
from .errors import NotComparable, TooLarge

LATTICE_SIZE_LIMIT = 9


class FlatLattice:
    """All flats of a matroid, ordered by inclusion."""

    __slots__ = ("matroid", "flats", "rank_of", "index", "bottom", "top",
                 "atoms", "_above", "_below", "_join", "_mobius", "_chi")

    def __init__(self, matroid, force=False):
        if matroid.n > LATTICE_SIZE_LIMIT and not force:
            raise TooLarge(
                f"lattice build for n={matroid.n} exceeds the guard "
                f"(n <= {LATTICE_SIZE_LIMIT}); the force flag overrides")
        self.matroid = matroid
        levels = [[matroid.closure(())]]
        for _ in range(matroid.full_rank):
            seen = set()
            for flat in levels[-1]:
                for e in range(matroid.n):
                    if e not in flat:
                        seen.add(matroid.closure(flat | {e}))
            levels.append(sorted(seen, key=sorted))
        flats = [f for level in levels for f in level]
        self.flats = tuple(flats)
        self.rank_of = tuple(r for r, level in enumerate(levels) for _ in level)
        self.index = {f: i for i, f in enumerate(flats)}
        self.bottom = 0
        self.top = len(flats) - 1
        self.atoms = tuple(range(1, 1 + len(levels[1]))) if len(levels) > 1 else ()
        above = []
        for i, f in enumerate(flats):
            above.append(frozenset(j for j, g in enumerate(flats) if f <= g))
        self._above = tuple(above)
        self._below = tuple(frozenset(j for j in range(len(flats))
                                      if i in above[j])
                            for i in range(len(flats)))
        self._join = {}
        self._mobius = self._build_mobius()
        self._chi = {}

    def _build_mobius(self):
        size = len(self.flats)
        table = [dict() for _ in range(size)]
        order = sorted(range(size), key=lambda j: self.rank_of[j])
        for i in range(size):
            ups = self._above[i]
            for j in order:
                if j not in ups:
                    continue
                if j == i:
                    table[i][j] = 1
                else:
                    table[i][j] = -sum(table[i][k] for k in ups
                                       if k in self._below[j] and k != j)
        return table

    def __len__(self):
        return len(self.flats)

    @property
    def proper_indices(self):
        """Interior of the lattice: everything except bottom and top."""
        return tuple(i for i in range(len(self.flats))
                     if i != self.bottom and i != self.top)

    @property
    def nonminimal_indices(self):
        """Everything above the bottom flat."""
        return tuple(i for i in range(len(self.flats)) if i != self.bottom)

    def leq(self, i, j):
        return j in self._above[i]

    def flats_by_rank(self):
        counts = [0] * (self.matroid.full_rank + 1)
        for r in self.rank_of:
            counts[r] += 1
        return tuple(counts)

    def join(self, i, j):
        if i > j:
            i, j = j, i
        key = (i, j)
        cached = self._join.get(key)
        if cached is None:
            cached = self.index[self.matroid.closure(self.flats[i] | self.flats[j])]
            self._join[key] = cached
        return cached

    def join_many(self, indices):
        current = self.bottom
        for i in indices:
            current = self.join(current, i)
        return current

    def mobius(self, i, j):
        """Moebius value of the interval [flat i, flat j]."""
        value = self._mobius[i].get(j)
        if value is None:
            raise NotComparable(f"flat {i} is not below flat {j}")
        return value

    def interval_char_poly(self, i, j):
        """Characteristic polynomial of the minor M|F_j / F_i."""
        cached = self._chi.get((i, j))
        if cached is not None:
            return cached
        if not self.leq(i, j):
            raise NotComparable(f"flat {i} is not below flat {j}")
        rj = self.rank_of[j]
        chi = LaurentPoly((rj - self.rank_of[k], self._mobius[i][k])
                          for k in self._above[i] if k in self._below[j])
        self._chi[(i, j)] = chi
        return chi

    def interval_reduced_char_poly(self, i, j):
        return self.interval_char_poly(i, j).divide_exact(Q_MINUS_ONE)

    def char_poly(self):
        """chi of the underlying matroid; zero when a loop is present."""
        if self.flats[self.bottom]:
            return LaurentPoly.zero()
        return self.interval_char_poly(self.bottom, self.top)

    def reduced_char_poly(self):
        return self.char_poly().divide_exact(Q_MINUS_ONE)

    def interval_minor(self, i, j):
        """The minor M|F_j / F_i as a Matroid."""
        if not self.leq(i, j):
            raise NotComparable(f"flat {i} is not below flat {j}")
        return self.matroid.minor(restrict_to=self.flats[j],
                                  contract_by=self.flats[i])

    def __repr__(self):
        return f"FlatLattice({len(self.flats)} flats, rank {self.matroid.full_rank})"
