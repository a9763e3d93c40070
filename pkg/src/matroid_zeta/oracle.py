"""Brute-force oracles, independent of the lattice machinery.

char_poly_whitney sums (-1)^{#S} q^{rk M - rk S} over every subset of the
ground set.  truncated_zeta_sum walks every weight vector with |w| up to a
bound, builds each initial matroid from the basis list directly, and takes
its characteristic polynomial through the same Whitney sum, so agreement
with the closed forms is a genuine two-route check.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import LaurentPoly, Q_MINUS_ONE
from .errors import TooLarge

WHITNEY_SIZE_LIMIT = 12
ORACLE_SIZE_LIMIT = 7
ORACLE_ORDER_LIMIT = 10


def _whitney_from_masks(n, rank, basis_masks):
    """Whitney subset sum over rk(S) = max #(B & S), as a LaurentPoly."""
    signed_counts = {}
    for mask in range(1 << n):
        r = max((bm & mask).bit_count() for bm in basis_masks)
        sign = -1 if mask.bit_count() % 2 else 1
        signed_counts[r] = signed_counts.get(r, 0) + sign
    return LaurentPoly({rank - r: c for r, c in signed_counts.items()})


def char_poly_whitney(matroid, force=False):
    """Characteristic polynomial by the subset sum; zero for loopy matroids."""
    if matroid.n > WHITNEY_SIZE_LIMIT and not force:
        raise TooLarge(
            f"Whitney sum for n={matroid.n} exceeds the guard "
            f"(n <= {WHITNEY_SIZE_LIMIT}); the force flag overrides")
    return _whitney_from_masks(matroid.n, matroid.full_rank, matroid._masks)


def _weight_vectors(n, total):
    """All nonnegative integer vectors of the given coordinate sum, lex order."""
    if n == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _weight_vectors(n - 1, total - head):
            yield (head,) + rest


def truncated_zeta_sum(matroid, kind, order, force=False):
    """T-adic coefficients 0..order of the chosen zeta kind, by summation.

    full     sums over all w >= 0 grouped by |w|
    local    keeps only strictly positive w
    reduced  keeps the representatives with min(w) = 0, uses the reduced
             characteristic polynomial and the shifted exponent of q
    """
    if kind not in ("full", "local", "reduced"):
        raise ValueError(f"unknown kind {kind!r}")
    if (matroid.n > ORACLE_SIZE_LIMIT or order > ORACLE_ORDER_LIMIT) and not force:
        raise TooLarge(
            f"oracle for n={matroid.n}, order={order} exceeds the guard "
            f"(n <= {ORACLE_SIZE_LIMIT}, order <= {ORACLE_ORDER_LIMIT}); "
            "the force flag overrides")
    n = matroid.n
    rank = matroid.full_rank
    basis_matrix = np.zeros((len(matroid.bases), n), dtype=np.int64)
    for i, basis in enumerate(matroid.bases):
        for e in basis:
            basis_matrix[i, e] = 1
    chi_cache = {}
    coefficients = []
    for total in range(order + 1):
        shell = np.array(list(_weight_vectors(n, total)), dtype=np.int64)
        basis_weights = shell @ basis_matrix.T
        tops = basis_weights.max(axis=1)
        winners = basis_weights == tops[:, None]
        mins = shell.min(axis=1)
        accum = {}
        for row in range(shell.shape[0]):
            if kind == "local" and mins[row] < 1:
                continue
            if kind == "reduced" and mins[row] != 0:
                continue
            key = winners[row].tobytes()
            chi = chi_cache.get(key)
            if chi is None:
                masks = [matroid._masks[i] for i in np.nonzero(winners[row])[0]]
                chi = _whitney_from_masks(n, rank, masks)
                chi_cache[key] = chi
            if kind == "reduced":
                chi = chi.divide_exact(Q_MINUS_ONE)
                exponent = -(rank - 1) - int(tops[row])
            else:
                exponent = -rank - int(tops[row])
            for e, v in chi.terms():
                accum[e + exponent] = accum.get(e + exponent, 0) + v
        coefficients.append(LaurentPoly(accum))
    return coefficients
