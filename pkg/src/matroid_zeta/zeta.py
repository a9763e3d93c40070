"""Motivic zeta functions of matroids, and their specializations.

Values are kept in structured form: a global power of q times a sum of
terms, one per nested set S of the chosen building set, each holding an
exact polynomial coefficient chi_{M_S}/(q-1)^{#S} and one geometric-series
generator (q-1) q^{-rk F} T^{#F} / (1 - q^{-rk F} T^{#F}) per member F of S.
All specializations (collapsing to a rational function, T-adic expansion,
the T -> infinity limit, and the topological zeta function) act on this
structured form.

The three kinds:

  full     sum over all nonnegative integer weight vectors
  local    sum over strictly positive weight vectors
  reduced  sum over weight classes modulo the all-ones vector
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .algebra import (LaurentPoly, PolyQT, Q_MINUS_ONE, RationalQT, RationalS,
                      _s_add, _s_mul, q_analogue)
from .buildings import BuildingSet
from .errors import InternalInvariantError, ParseError
from .lattice import FlatLattice

KINDS = ("full", "local", "reduced")


@dataclass(frozen=True)
class ZetaTerm:
    """coeff times the product of the generators indexed by (#F, rk F)."""

    coeff: LaurentPoly
    generators: tuple

    @property
    def t_power(self):
        return sum(a for a, _ in self.generators)


@dataclass(frozen=True)
class StructuredZeta:
    """q^q_shift times a sum of ZetaTerms."""

    kind: str
    q_shift: int
    terms: tuple


def default_context(matroid, lattice=None, building=None):
    """Fill in the lattice and the maximal building set when not supplied."""
    if lattice is None:
        lattice = FlatLattice(matroid)
    if building is None:
        building = BuildingSet.maximal(lattice)
    return lattice, building


def nested_coefficient(lattice, building, nested, extra_reduction=0):
    """chi_{M_S} / (q-1)^(#S + extra_reduction), an exact Laurent polynomial.

    M_S is the direct sum over F in S union fact(E) of the minors
    M|F / z(F); its chi is the product of the interval characteristic
    polynomials, no minor is actually constructed.
    """
    union = frozenset(nested) | building.fact_top
    z = building.z_map(union)
    chi = LaurentPoly.one()
    for f in union:
        chi = chi * lattice.interval_char_poly(z[f], f)
    return chi.divide_exact(Q_MINUS_ONE ** (len(nested) + extra_reduction))


def nested_set_matroid(lattice, building, nested):
    """M_S itself: the direct sum of the minors M|F / z(F)."""
    union = frozenset(nested) | building.fact_top
    z = building.z_map(union)
    parts = [lattice.interval_minor(z[f], f) for f in sorted(union)]
    if not parts:
        raise InternalInvariantError("a nested-set matroid needs the top factors")
    total = parts[0]
    for part in parts[1:]:
        total = total.direct_sum(part)
    return total


def motivic_zeta(matroid, lattice=None, building=None, kind="full"):
    """The structured zeta function of the requested kind."""
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {KINDS}")
    rank = matroid.full_rank
    q_shift = -(rank - 1) if kind == "reduced" else -rank
    if not matroid.is_loopless:
        return StructuredZeta(kind, q_shift, ())
    lattice, building = default_context(matroid, lattice, building)
    if kind == "full":
        family = building.nested_sets()
    elif kind == "local":
        family = building.local_nested_sets()
    else:
        family = building.proper_nested_sets()
    extra = 1 if kind == "reduced" else 0
    terms = []
    for nested in family:
        coeff = nested_coefficient(lattice, building, nested, extra)
        gens = tuple(sorted((len(lattice.flats[f]), lattice.rank_of[f])
                            for f in nested))
        terms.append(ZetaTerm(coeff, gens))
    return StructuredZeta(kind, q_shift, tuple(terms))


def scale_q(zeta, power):
    """The same zeta multiplied by q^power."""
    return StructuredZeta(zeta.kind, zeta.q_shift + power, zeta.terms)


def _generator_multiplicities(zeta):
    global_mult = Counter()
    per_term = []
    for term in zeta.terms:
        mult = Counter(term.generators)
        for key, m in mult.items():
            if global_mult[key] < m:
                global_mult[key] = m
        per_term.append(mult)
    return global_mult, per_term


def collapse(zeta):
    """The zeta function as a single RationalQT over a common denominator.

    Each generator is cleared to (q-1) T^a / (q^b - T^a); the common
    denominator is the product of the distinct binomials q^b - T^a at their
    maximal per-term multiplicity; shared binomial factors are cancelled
    again at the end by exact trial division.
    """
    if not zeta.terms:
        return RationalQT.zero()
    global_mult, per_term = _generator_multiplicities(zeta)
    binomials = {key: PolyQT.binomial_q_minus_t(key[1], key[0])
                 for key in global_mult}
    den = PolyQT.one()
    for key, m in global_mult.items():
        den = den * binomials[key] ** m
    num = PolyQT.zero()
    for term, mult in zip(zeta.terms, per_term):
        poly = term.coeff * Q_MINUS_ONE ** len(term.generators)
        piece = poly.to_poly_qt(t_exp=term.t_power)
        for key, m in global_mult.items():
            deficit = m - mult.get(key, 0)
            if deficit:
                piece = piece * binomials[key] ** deficit
        num = num + piece
    if zeta.q_shift >= 0:
        num = num.shift(zeta.q_shift, 0)
    else:
        den = den.shift(-zeta.q_shift, 0)
    return RationalQT(num, den, cancel=tuple(binomials.values()))


def series_coefficients(zeta, order):
    """First order+1 T-adic coefficients, as Laurent polynomials in q."""
    rational = collapse(zeta) if isinstance(zeta, StructuredZeta) else zeta
    return rational.series_coefficients(order)


def limit_t_infinity(zeta):
    """Composite of T -> 1/T and T -> 0: each generator maps to -(q-1)."""
    total = LaurentPoly.zero()
    for term in zeta.terms:
        image = term.coeff * Q_MINUS_ONE ** len(term.generators)
        if len(term.generators) % 2:
            image = -image
        total = total + image
    return total.shift(zeta.q_shift)


def mu_top(zeta):
    """Topological specialization: q -> 1, each (a, b) generator -> 1/(a s + b)."""
    if not zeta.terms:
        return RationalS.zero()
    global_mult, per_term = _generator_multiplicities(zeta)
    linear = {key: [key[1], key[0]] for key in global_mult}
    den = [1]
    for key, m in global_mult.items():
        for _ in range(m):
            den = _s_mul(den, linear[key])
    num = []
    for term, mult in zip(zeta.terms, per_term):
        value = term.coeff.at_one()
        if not value:
            continue
        piece = [value]
        for key, m in global_mult.items():
            for _ in range(m - mult.get(key, 0)):
                piece = _s_mul(piece, linear[key])
        num = _s_add(num, piece)
    return RationalS(num, den)


def topological_zeta(matroid, lattice=None, building=None):
    """Z^top(s), via mu_top of the full structured zeta."""
    lattice, building = default_context(matroid, lattice, building)
    return mu_top(motivic_zeta(matroid, lattice, building, "full"))


def nested_coefficient_table(lattice, building):
    """chi_{M_S}/(q-1)^{#S} for every nested set S."""
    return {nested: nested_coefficient(lattice, building, nested)
            for nested in building.nested_sets()}


def poincare_polynomials(lattice, building):
    """P^S for every nested set S: the sum of the table over nested supersets."""
    table = nested_coefficient_table(lattice, building)
    out = {nested: LaurentPoly.zero() for nested in table}
    for superset, value in table.items():
        elements = sorted(superset)
        for size in range(len(elements) + 1):
            for combo in itertools.combinations(elements, size):
                key = frozenset(combo)
                out[key] = out[key] + value
    return out


def h_polynomials(lattice, building):
    """H^S for every nested set S (graded ranks of the FY ring presentation).

    For S containing fact(E) this is the defining sum over compatible nested
    families, regrouped by the union U = T | S so each U is visited once:
    the inner alternatives contribute g(F) for F outside S and 1 + g(F) for
    F in S, with g(F) = [rk F - rk z_U(F)]_q - 1.  For the remaining S the
    value is q^{#(fact(E) - S)} H^{S | fact(E)}.
    """
    fact = building.fact_top
    star = [u for u in building.nested_sets() if fact <= u]
    table = {u: LaurentPoly.zero() for u in star}
    one = LaurentPoly.one()
    for u in star:
        z = building.z_map(u)
        g = {f: q_analogue(lattice.rank_of[f] - lattice.rank_of[z[f]]) - 1
             for f in u}
        free = sorted(u - fact)
        for size in range(len(free) + 1):
            for combo in itertools.combinations(free, size):
                s = fact | frozenset(combo)
                prod = one
                for f in u:
                    prod = prod * ((one + g[f]) if f in s else g[f])
                table[s] = table[s] + prod
    out = {}
    for s in building.nested_sets():
        if fact <= s:
            out[s] = table[s]
        else:
            key = frozenset(s) | fact
            base = table.get(key)
            if base is None:
                raise InternalInvariantError(
                    "a nested set united with the top factors stopped being nested")
            out[s] = LaurentPoly.q_power(len(fact - s)) * base
    return out


def h_polynomial_plain_sum(lattice, building):
    """H as the direct sum over all nested sets of the bracket products."""
    total = LaurentPoly.zero()
    for nested in building.nested_sets():
        z = building.z_map(nested)
        prod = LaurentPoly.one()
        for f in nested:
            prod = prod * (q_analogue(lattice.rank_of[f]
                                      - lattice.rank_of[z[f]]) - 1)
        total = total + prod
    return total


def fy_hilbert_series(lattice, building):
    """Hilbert series of the FY ring: P^{fact(E)} evaluated at q^2."""
    p = poincare_polynomials(lattice, building)[frozenset(building.fact_top)]
    return LaurentPoly({2 * e: v for e, v in p.terms()})


def vdv_zeta(matroid, lattice=None, building=None):
    """Topological zeta assembled from H-polynomial values at q = 1.

    Requires a loopless matroid.  Agrees with mu_top of the motivic zeta.
    """
    if not matroid.is_loopless:
        raise ParseError("the H-polynomial form needs a loopless matroid")
    lattice, building = default_context(matroid, lattice, building)
    h_at_one = {s: p.at_one() for s, p in h_polynomials(lattice, building).items()}
    alternating = {s: 0 for s in h_at_one}
    for superset, value in h_at_one.items():
        elements = sorted(superset)
        for size in range(len(elements) + 1):
            sign = -1 if (len(elements) - size) % 2 else 1
            for combo in itertools.combinations(elements, size):
                alternating[frozenset(combo)] += sign * value
    global_mult = Counter()
    gen_of = {}
    for s in alternating:
        mult = Counter((len(lattice.flats[f]), lattice.rank_of[f]) for f in s)
        gen_of[s] = mult
        for key, m in mult.items():
            if global_mult[key] < m:
                global_mult[key] = m
    linear = {key: [key[1], key[0]] for key in global_mult}
    den = [1]
    for key, m in global_mult.items():
        for _ in range(m):
            den = _s_mul(den, linear[key])
    num = []
    for s, value in alternating.items():
        if not value:
            continue
        piece = [value]
        for key, m in global_mult.items():
            for _ in range(m - gen_of[s].get(key, 0)):
                piece = _s_mul(piece, linear[key])
        num = _s_add(num, piece)
    return RationalS(num, den)
