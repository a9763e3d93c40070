"""Matroids stored by explicit basis lists.

The rank oracle is rk(S) = max over bases B of #(B intersect S), which is
exact for every subset and adequate at desk scale.  All values are immutable
after construction; every operation returns a fresh Matroid.  Minors re-index
their ground set to 0..k-1 and keep the original element labels.
"""

from __future__ import annotations

import itertools

from .errors import EmptyGroundSet, ParseError


class Matroid:
    """A matroid on ground set {0, ..., n-1} given by its bases."""

    __slots__ = ("n", "bases", "labels", "_masks", "_full_rank")

    def __init__(self, n, bases, labels=None, check=True):
        n = int(n)
        if n < 1:
            raise EmptyGroundSet("ground set must be non-empty")
        basis_sets = sorted({frozenset(int(e) for e in b) for b in bases},
                            key=sorted)
        if not basis_sets:
            raise ParseError("a matroid needs at least one basis")
        self.n = n
        self.bases = tuple(basis_sets)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ParseError("label map must cover the ground set")
        self._full_rank = len(basis_sets[0])
        self._masks = tuple(self._mask(b) for b in basis_sets)
        if check:
            self._check_axioms()

    def _check_axioms(self):
        ground = self.ground_set
        for b in self.bases:
            if len(b) != self._full_rank:
                raise ParseError("bases differ in size")
            if not b <= ground:
                raise ParseError("basis uses elements outside the ground set")
        base_set = set(self.bases)
        for b1 in self.bases:
            for b2 in self.bases:
                for e in b1 - b2:
                    stripped = b1 - {e}
                    if not any(stripped | {f} in base_set for f in b2 - b1):
                        raise ParseError(
                            "basis exchange fails for "
                            f"{sorted(b1)}, {sorted(b2)}, element {e}")

    @classmethod
    def uniform(cls, rank, n):
        """U_{rank, n}: every rank-subset is a basis."""
        if not 0 <= rank <= n:
            raise ParseError("uniform matroid needs 0 <= rank <= size")
        return cls(n, itertools.combinations(range(n), rank), check=False)

    @classmethod
    def graphic(cls, edges):
        """Cycle matroid of a graph; elements index the given edges."""
        edges = [tuple(int(v) for v in e) for e in edges]
        if not edges or any(len(e) != 2 for e in edges):
            raise ParseError("edge list must be non-empty pairs of vertices")
        vertices = sorted({v for e in edges for v in e})
        index = {v: i for i, v in enumerate(vertices)}

        def forest_rank(subset):
            parent = list(range(len(vertices)))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            count = 0
            for i in subset:
                a, b = (find(index[v]) for v in edges[i])
                if a != b:
                    parent[a] = b
                    count += 1
            return count

        rank = forest_rank(range(len(edges)))
        bases = [c for c in itertools.combinations(range(len(edges)), rank)
                 if forest_rank(c) == rank]
        return cls(len(edges), bases, check=False)

    @property
    def ground_set(self):
        return frozenset(range(self.n))

    @property
    def full_rank(self):
        return self._full_rank

    def _mask(self, subset):
        m = 0
        for e in subset:
            m |= 1 << e
        return m

    def rank(self, subset):
        """rk(S) = max over bases of #(B intersect S)."""
        m = self._mask(subset)
        return max((bm & m).bit_count() for bm in self._masks)

    def _rank_mask(self, mask):
        return max((bm & mask).bit_count() for bm in self._masks)

    def closure(self, subset):
        """Smallest flat containing the subset."""
        m = self._mask(subset)
        r = self._rank_mask(m)
        out = m
        for e in range(self.n):
            bit = 1 << e
            if not out & bit and self._rank_mask(m | bit) == r:
                out |= bit
        return frozenset(e for e in range(self.n) if out >> e & 1)

    def loops(self):
        """Elements of rank zero (belong to no basis)."""
        covered = 0
        for bm in self._masks:
            covered |= bm
        return frozenset(e for e in range(self.n) if not covered >> e & 1)

    @property
    def is_loopless(self):
        return not self.loops()

    def is_independent(self, subset):
        subset = frozenset(subset)
        return self.rank(subset) == len(subset)

    def minor(self, restrict_to=None, contract_by=None):
        """(M | restrict_to) / contract_by, re-indexed, labels retained."""
        outer = self.ground_set if restrict_to is None else frozenset(restrict_to)
        inner = frozenset() if contract_by is None else frozenset(contract_by)
        if not inner <= outer or not outer <= self.ground_set:
            raise ParseError("minor needs contract_by <= restrict_to <= ground set")
        if outer == inner:
            raise EmptyGroundSet("minor would have an empty ground set")
        r_outer = self.rank(outer)
        restricted = {b & outer for b in self.bases if len(b & outer) == r_outer}
        fixed = self._max_independent_in(inner)
        minor_bases = {b - fixed for b in restricted if fixed <= b}
        elements = sorted(outer - inner)
        local = {e: i for i, e in enumerate(elements)}
        return Matroid(len(elements),
                       [{local[e] for e in b} for b in minor_bases],
                       labels=[self.labels[e] for e in elements],
                       check=False)

    def _max_independent_in(self, subset):
        current = frozenset()
        for e in sorted(subset):
            if self.rank(current | {e}) > len(current):
                current = current | {e}
        return current

    def direct_sum(self, other):
        """Disjoint union; the second summand's elements are shifted by self.n."""
        shifted = [{e + self.n for e in b} for b in other.bases]
        bases = [set(b1) | b2 for b1 in self.bases for b2 in shifted]
        labels = list(self.labels) + [lab + self.n for lab in other.labels]
        return Matroid(self.n + other.n, bases, labels=labels, check=False)

    def circuits(self):
        """Minimal dependent sets, by exhaustive scan up to size rank + 1."""
        found = []
        for size in range(1, self._full_rank + 2):
            for combo in itertools.combinations(range(self.n), size):
                s = frozenset(combo)
                if self.rank(s) < size and \
                        all(self.is_independent(s - {e}) for e in s):
                    found.append(s)
        return found

    def is_connected(self):
        """One circuit-connectivity class covering E, and positive rank."""
        if self._full_rank == 0:
            return False
        if self.n == 1:
            return self.is_loopless
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for circuit in self.circuits():
            it = iter(circuit)
            first = find(next(it))
            for e in it:
                parent[find(e)] = first
        return len({find(e) for e in range(self.n)}) == 1

    def max_weight_basis(self, weights):
        """A maximum-weight basis and its weight, by the greedy rule."""
        if len(weights) != self.n:
            raise ParseError("weight vector length must equal the ground-set size")
        order = sorted(range(self.n), key=lambda e: (-weights[e], e))
        mask = 0
        rank = 0
        for e in order:
            if self._rank_mask(mask | 1 << e) > rank:
                mask |= 1 << e
                rank += 1
        basis = frozenset(e for e in range(self.n) if mask >> e & 1)
        return basis, sum(weights[e] for e in basis)

    def weight(self, weights):
        """wt(w) = max over bases of the basis weight."""
        return self.max_weight_basis(weights)[1]

    def basis_weights(self, weights):
        return [sum(weights[e] for e in b) for b in self.bases]

    def initial_matroid(self, weights):
        """Matroid on the same ground set whose bases are the max-weight bases."""
        values = self.basis_weights(weights)
        top = max(values)
        kept = [b for b, v in zip(self.bases, values) if v == top]
        return Matroid(self.n, kept, labels=self.labels, check=False)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return (f"Matroid(n={self.n}, rank={self._full_rank}, "
                f"bases={len(self.bases)})")
