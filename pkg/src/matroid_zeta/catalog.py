"""Built-in matroids, shipped as frozen explicit basis lists.

Each rank-4 example guards itself at first construction by recomputing its
characteristic polynomial, and each rank-3 example by recomputing its full
zeta function, against values frozen here; a mismatch raises
TranscriptionError rather than silently serving a wrong matroid.  The guard
runs once per process and is cached.
"""

from __future__ import annotations

import itertools

from .algebra import LaurentPoly, PolyQT, RationalQT
from .errors import ParseError, TranscriptionError
from .matroid import Matroid

FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
              (1, 4, 6), (2, 3, 6), (2, 4, 5))

K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

RANK4_PRISM_BASES = (
    (0, 1, 2, 4), (0, 1, 2, 5), (0, 1, 2, 6), (0, 1, 3, 4), (0, 1, 3, 5),
    (0, 1, 3, 6), (0, 1, 4, 5), (0, 1, 4, 6), (0, 2, 3, 4), (0, 2, 3, 5),
    (0, 2, 3, 6), (0, 3, 4, 5), (0, 3, 4, 6), (1, 2, 3, 4), (1, 2, 3, 5),
    (1, 2, 3, 6), (1, 2, 4, 5), (1, 2, 5, 6), (1, 3, 4, 6), (1, 3, 5, 6),
    (1, 4, 5, 6), (2, 3, 4, 5), (2, 3, 5, 6), (3, 4, 5, 6))

RANK4_PYRAMID_BASES = (
    (0, 1, 3, 5), (0, 1, 3, 6), (0, 1, 4, 5), (0, 1, 4, 6), (0, 1, 5, 6),
    (0, 2, 3, 5), (0, 2, 3, 6), (0, 2, 4, 5), (0, 2, 4, 6), (0, 2, 5, 6),
    (0, 3, 4, 5), (0, 3, 4, 6), (0, 3, 5, 6), (1, 2, 3, 5), (1, 2, 3, 6),
    (1, 2, 4, 5), (1, 2, 4, 6), (1, 2, 5, 6), (1, 3, 4, 5), (1, 3, 4, 6),
    (1, 3, 5, 6), (2, 3, 4, 5), (2, 3, 4, 6), (2, 3, 5, 6))

RANK3_TWIN_A_LINES = ((0, 4, 5), (0, 1, 2), (2, 3, 5), (1, 3, 6))
RANK3_TWIN_B_LINES = ((0, 4, 5), (0, 1, 2), (2, 3, 5), (0, 3, 6))

RANK4_EXPECTED_CHI = LaurentPoly({4: 1, 3: -7, 2: 19, 1: -23, 0: 10})

RANK3_TWIN_ZETA_NUMERATOR_ROWS = {
    0: {6: 1, 5: -6, 4: 11},
    1: {5: 5, 4: -18, 3: 1},
    2: {4: 3, 3: 6, 2: -3},
    3: {4: 3, 3: -6, 2: -3},
    4: {3: -1, 2: 18, 1: -5},
    5: {2: -11, 1: 6, 0: -1},
}


def rank3_twin_zeta_target():
    """The frozen full zeta shared by both rank-3 twin matroids."""
    inner = PolyQT({(qe, te): v
                    for te, row in RANK3_TWIN_ZETA_NUMERATOR_ROWS.items()
                    for qe, v in row.items()})
    num = inner * PolyQT({(1, 0): 1, (0, 0): -1})
    den = (PolyQT.binomial_q_minus_t(1, 1) ** 2
           * PolyQT.binomial_q_minus_t(2, 3)
           * PolyQT.binomial_q_minus_t(3, 7))
    return RationalQT(num, den)


def _triples_avoiding(lines):
    banned = {frozenset(line) for line in lines}
    return [c for c in itertools.combinations(range(7), 3)
            if frozenset(c) not in banned]


def _build(name):
    if name == "fano":
        return Matroid(7, _triples_avoiding(FANO_LINES), check=False)
    if name == "nonfano":
        return Matroid(7, _triples_avoiding(FANO_LINES[:-1]), check=False)
    if name == "k4":
        return Matroid.graphic(K4_EDGES)
    if name == "M1":
        return Matroid(7, RANK4_PRISM_BASES, check=True)
    if name == "M2":
        return Matroid(7, RANK4_PYRAMID_BASES, check=True)
    if name == "N1":
        return Matroid(7, _triples_avoiding(RANK3_TWIN_A_LINES), check=False)
    if name == "N2":
        return Matroid(7, _triples_avoiding(RANK3_TWIN_B_LINES), check=False)
    raise ParseError(f"unknown matroid name {name!r}; "
                     f"choose one of {', '.join(NAMED_MATROIDS)}")


def _guard(name, matroid):
    from .lattice import FlatLattice
    from .zeta import collapse, motivic_zeta

    if name in ("M1", "M2"):
        chi = FlatLattice(matroid).char_poly()
        if chi != RANK4_EXPECTED_CHI:
            raise TranscriptionError(
                f"{name}: characteristic polynomial came out {chi}, "
                f"expected {RANK4_EXPECTED_CHI}")
    elif name in ("N1", "N2"):
        zeta = collapse(motivic_zeta(matroid))
        if zeta != rank3_twin_zeta_target():
            raise TranscriptionError(
                f"{name}: full zeta function deviates from the frozen value")


NAMED_MATROIDS = ("fano", "nonfano", "k4", "M1", "M2", "N1", "N2")

_cache = {}


def named_matroid(name):
    """A built-in matroid by name (case-insensitive); guarded, then cached."""
    canonical = {n.lower(): n for n in NAMED_MATROIDS}.get(str(name).lower())
    if canonical is None:
        raise ParseError(f"unknown matroid name {name!r}; "
                         f"choose one of {', '.join(NAMED_MATROIDS)}")
    cached = _cache.get(canonical)
    if cached is None:
        cached = _build(canonical)
        _guard(canonical, cached)
        _cache[canonical] = cached
    return cached
