"""Verification suites behind the command line `verify` subcommand.

Every suite re-derives one family of identities with independent
arithmetic and reports the outcome as CheckResult records.  The suites
never trust each other: the recurrence suite rebuilds minors from basis
lists, the oracle suite enumerates lattice points, and the building-set
suite recomputes the zeta function from scratch for each building set.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LaurentPoly, PolyQT, Q_MINUS_ONE, RationalQT, RationalS, q_analogue
from .buildings import BuildingSet, sample_intermediate_building_sets
from .errors import TooLarge
from .lattice import FlatLattice
from .matroid import Matroid
from .oracle import ORACLE_ORDER_LIMIT, ORACLE_SIZE_LIMIT, char_poly_whitney, truncated_zeta_sum
from .zeta import (KINDS, collapse, fy_hilbert_series, h_polynomial_plain_sum,
                   h_polynomials, limit_t_infinity, motivic_zeta, mu_top,
                   nested_coefficient, poincare_polynomials, scale_q,
                   series_coefficients, topological_zeta, vdv_zeta)

SUITE_NAMES = ("functional", "recurrence", "taylor", "oracle", "buildingset",
               "poincare")


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"suite": self.suite, "name": self.name,
                "status": "pass" if self.passed else "fail",
                "detail": self.detail}


@dataclass
class Report:
    """Outcome of one or more verification suites on a single matroid."""

    subject: str
    results: list = field(default_factory=list)
    durations: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def counts(self):
        good = sum(1 for r in self.results if r.passed)
        return good, len(self.results) - good

    def to_json(self):
        good, bad = self.counts
        return {"subject": self.subject,
                "status": "pass" if self.passed else "fail",
                "passed": good, "failed": bad,
                "checks": [r.to_json() for r in self.results]}

    def render_text(self):
        lines = []
        for r in self.results:
            word = "PASS" if r.passed else "FAIL"
            line = f"{word} {r.suite:<12} {r.name}"
            if r.detail and not r.passed:
                line += f"  [{r.detail}]"
            lines.append(line)
        good, bad = self.counts
        suites = len(self.durations) or len({r.suite for r in self.results})
        lines.append(f"{suites} suites, {good + bad} checks, "
                     f"{good} passed, {bad} failed")
        return "\n".join(lines)


def _clip(value, width=100):
    text = str(value)
    return text if len(text) <= width else text[:width] + "..."


class Workspace:
    """Shared lattice, building sets, and zeta functions for the suites."""

    def __init__(self, matroid, force=False, seed=0, intermediates=3):
        self.matroid = matroid
        self.force = force
        self.seed = seed
        self.lattice = FlatLattice(matroid, force=force)
        self._buildings = {
            "max": BuildingSet.maximal(self.lattice),
            "min": BuildingSet.minimal(self.lattice),
        }
        sampled = sample_intermediate_building_sets(self.lattice,
                                                    count=intermediates,
                                                    seed=seed)
        for k, b in enumerate(sampled, start=1):
            self._buildings[f"alt{k}"] = b
        self._zeta = {}
        self._rational = {}

    @property
    def building_labels(self):
        return tuple(self._buildings)

    def building(self, label):
        return self._buildings[label]

    def zeta(self, label, kind):
        key = (label, kind)
        if key not in self._zeta:
            self._zeta[key] = motivic_zeta(self.matroid, self.lattice,
                                           self._buildings[label], kind)
        return self._zeta[key]

    def rational(self, label, kind):
        key = (label, kind)
        if key not in self._rational:
            self._rational[key] = collapse(self.zeta(label, kind))
        return self._rational[key]


def _push(out, suite, name, ok, detail=""):
    out.append(CheckResult(suite, name, bool(ok), detail if not ok else ""))


def _push_eq(out, suite, name, left, right):
    ok = left == right
    _push(out, suite, name, ok, f"left={_clip(left)} right={_clip(right)}")


def _suite_functional(ws):
    """Kind relationships, the functional equation, T = 0, T -> infinity."""
    out = []
    m, lat = ws.matroid, ws.lattice
    rk, n = m.full_rank, m.n
    if not m.is_loopless:
        for kind in KINDS:
            _push_eq(out, "functional", f"loop-vanishing-{kind}",
                     ws.rational("max", kind), RationalQT.zero())
        return out
    full = ws.rational("max", "full")
    local = ws.rational("max", "local")
    red = ws.rational("max", "reduced")
    binom = RationalQT(PolyQT.binomial_q_minus_t(rk, n))
    qm1 = RationalQT.from_laurent(Q_MINUS_ONE)
    _push_eq(out, "functional", "relationship-full-reduced", full,
             qm1 * RationalQT.from_laurent(LaurentPoly.q_power(rk - 1)) / binom * red)
    _push_eq(out, "functional", "relationship-local-reduced", local,
             qm1 * RationalQT(PolyQT.term(1, 0, n), PolyQT.term(1, 1, 0)) / binom * red)
    _push_eq(out, "functional", "functional-equation",
             red.substitute_inverse(),
             RationalQT.from_laurent(LaurentPoly.q_power(rk - 1)) * red)
    _push_eq(out, "functional", "t-zero-full",
             full.at_t_zero(), lat.char_poly().shift(-rk))
    _push_eq(out, "functional", "t-zero-local",
             local.at_t_zero(), LaurentPoly.zero())
    _push_eq(out, "functional", "t-zero-reduced",
             red.at_t_zero(), lat.reduced_char_poly().shift(-(rk - 1)))
    _push_eq(out, "functional", "alternating-sum",
             limit_t_infinity(scale_q(ws.zeta("max", "reduced"), rk - 1)),
             lat.reduced_char_poly().substitute_inverse().shift(rk - 1))
    return out


def _suite_recurrence(ws):
    """Deletion-style recurrences for the local and topological zetas.

    Both right-hand sides are assembled from proper-flat minors whose zeta
    functions are computed from their own basis lists and lattices.
    """
    out = []
    m, lat = ws.matroid, ws.lattice
    rk, n = m.full_rank, m.n
    lhs_qt = RationalQT.from_laurent(LaurentPoly.q_power(rk)) * ws.rational("max", "local")
    acc_qt = RationalQT.from_laurent(lat.reduced_char_poly())
    acc_s = RationalS.from_fraction(lat.reduced_char_poly().at_one())
    for f in lat.proper_indices:
        sub = m.minor(restrict_to=lat.flats[f])
        sub_lat = FlatLattice(sub, force=ws.force)
        sub_building = BuildingSet.maximal(sub_lat)
        chibar = lat.interval_reduced_char_poly(f, lat.top)
        zf = collapse(motivic_zeta(sub, sub_lat, sub_building, "local"))
        acc_qt = acc_qt + RationalQT.from_laurent(
            chibar, q_shift=lat.rank_of[f]) * zf
        value = chibar.at_one()
        if value:
            acc_s = acc_s + RationalS.from_fraction(value) * mu_top(
                motivic_zeta(sub, sub_lat, sub_building, "full"))
    pref = RationalQT(PolyQT({(1, n): 1, (0, n): -1}),
                      PolyQT.binomial_q_minus_t(rk, n))
    _push_eq(out, "recurrence", "zeta-recurrence", lhs_qt, pref * acc_qt)
    _push_eq(out, "recurrence", "topological-recurrence",
             mu_top(ws.zeta("max", "full")),
             RationalS.reciprocal_linear(n, rk) * acc_s)
    return out


def _suite_taylor(ws):
    """Value and first derivative of the topological zeta at s = 0."""
    out = []
    ztop = mu_top(ws.zeta("max", "full"))
    if not ws.matroid.is_loopless:
        _push_eq(out, "taylor", "loop-vanishing-topological", ztop, RationalS.zero())
        return out
    _push_eq(out, "taylor", "value-at-zero", ztop.value_at_zero(), Fraction(1))
    _push_eq(out, "taylor", "derivative-at-zero",
             ztop.derivative_at_zero(), Fraction(-ws.matroid.n))
    _push_eq(out, "taylor", "mu-top-local-equals-full",
             mu_top(ws.zeta("max", "local")), ztop)
    return out


def _suite_oracle(ws, tmax):
    """Brute-force subset sums and lattice-point sums against closed forms."""
    out = []
    m, lat = ws.matroid, ws.lattice
    if m.n > ORACLE_SIZE_LIMIT and not ws.force:
        _push(out, "oracle", "skipped", True)
        out[-1].detail = f"ground set larger than {ORACLE_SIZE_LIMIT}; pass --force"
        return out
    order = min(tmax, ORACLE_ORDER_LIMIT) if not ws.force else tmax
    _push_eq(out, "oracle", "whitney-char",
             char_poly_whitney(m, force=ws.force), lat.char_poly())
    for kind in KINDS:
        _push_eq(out, "oracle", f"expansion-{kind}",
                 truncated_zeta_sum(m, kind, order, force=ws.force),
                 series_coefficients(ws.rational("max", kind), order))
    rng = random.Random(ws.seed)
    ok = True
    worst = ""
    for _ in range(4):
        w = [rng.randint(0, 5) for _ in range(m.n)]
        greedy = m.weight(w)
        brute = max(sum(w[e] for e in b) for b in m.bases)
        if greedy != brute:
            ok = False
            worst = f"w={w} greedy={greedy} brute={brute}"
            break
    _push(out, "oracle", "greedy-max-weight", ok, worst)
    return out


def _suite_buildingset(ws):
    """Validity, independence of the collapsed zeta, limits, and vdv form."""
    out = []
    m, lat = ws.matroid, ws.lattice
    rk = m.full_rank
    labels = ws.building_labels
    for label in ("max", "min"):
        _push(out, "buildingset", f"{label}-valid", ws.building(label).is_valid())
    alts = [label for label in labels if label.startswith("alt")]
    _push(out, "buildingset", "intermediates", True)
    out[-1].detail = f"{len(alts)} sampled"
    for kind in KINDS:
        base = ws.rational("max", kind)
        for label in labels[1:]:
            _push_eq(out, "buildingset", f"independence-{kind}-{label}",
                     ws.rational(label, kind), base)
    if m.is_loopless:
        target = lat.reduced_char_poly().substitute_inverse().shift(rk - 1)
        for label in labels:
            _push_eq(out, "buildingset", f"alternating-{label}",
                     limit_t_infinity(scale_q(ws.zeta(label, "reduced"), rk - 1)),
                     target)
        for label in labels:
            _push_eq(out, "buildingset", f"vdv-{label}",
                     vdv_zeta(m, lat, ws.building(label)),
                     mu_top(ws.zeta(label, "full")))
    else:
        _push(out, "buildingset", "vdv-skipped", True)
        out[-1].detail = "matroid has loops"
    return out


def _suite_poincare(ws):
    """P = H on every nested set, degrees, palindromicity, Hilbert series."""
    out = []
    m, lat = ws.matroid, ws.lattice
    rk = m.full_rank
    if not m.is_loopless:
        _push(out, "poincare", "skipped", True)
        out[-1].detail = "matroid has loops"
        return out
    for label in ("max", "min"):
        b = ws.building(label)
        p = poincare_polynomials(lat, b)
        h = h_polynomials(lat, b)
        bad = [s for s in p if p[s] != h[s]]
        _push(out, "poincare", f"ph-equal-{label}", not bad,
              f"{len(bad)} nested sets disagree" if bad else "")
        fact = frozenset(b.fact_top)
        _push_eq(out, "poincare", f"h-plain-sum-{label}",
                 h_polynomial_plain_sum(lat, b), h[fact])
        deg_ok, pal_ok = True, True
        for s in b.local_nested_sets():
            ps = p[frozenset(s)]
            d = rk - len(s)
            if ps.min_exp != 0 or ps.max_exp != d:
                deg_ok = False
            if LaurentPoly({d - e: c for e, c in ps.terms()}) != ps:
                pal_ok = False
        _push(out, "poincare", f"p-degree-{label}", deg_ok,
              "some P^S has wrong degree or support")
        _push(out, "poincare", f"p-palindromic-{label}", pal_ok,
              "some P^S is not palindromic")
        series = fy_hilbert_series(lat, b)
        even = all(e % 2 == 0 and c > 0 for e, c in series.terms())
        _push(out, "poincare", f"fy-hilbert-{label}",
              even and series.coefficient(0) == 1
              and series.max_exp == 2 * (rk - len(fact)),
              f"series={_clip(series)}")
    b_max = ws.building("max")
    p_m = poincare_polynomials(lat, b_max)[frozenset(b_max.fact_top)]
    h_m = h_polynomial_plain_sum(lat, b_max)
    acc_p = lat.reduced_char_poly()
    acc_h = lat.reduced_char_poly()
    for f in lat.proper_indices:
        sub = m.minor(restrict_to=lat.flats[f])
        sub_lat = FlatLattice(sub, force=ws.force)
        sub_b = BuildingSet.maximal(sub_lat)
        chibar = lat.interval_reduced_char_poly(f, lat.top)
        pbar_sub = LaurentPoly.zero()
        for t in sub_b.local_nested_sets():
            pbar_sub = pbar_sub + nested_coefficient(sub_lat, sub_b, t)
        acc_p = acc_p + chibar * pbar_sub
        acc_h = acc_h + chibar * h_polynomial_plain_sum(sub_lat, sub_b)
    _push_eq(out, "poincare", "pbar-recursion", p_m, acc_p)
    _push_eq(out, "poincare", "h-recursion", h_m, acc_h)
    return out


def run_suites(matroid, suites=("all",), tmax=6, seed=0, force=False,
               subject="matroid"):
    """Run the requested suites and collect a Report."""
    wanted = []
    for name in suites:
        if name == "all":
            wanted.extend(SUITE_NAMES)
        elif name in SUITE_NAMES:
            wanted.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}")
    seen = set()
    ordered = [s for s in wanted if not (s in seen or seen.add(s))]
    ws = Workspace(matroid, force=force, seed=seed)
    report = Report(subject=subject)
    runners = {
        "functional": _suite_functional,
        "recurrence": _suite_recurrence,
        "taylor": _suite_taylor,
        "oracle": lambda w: _suite_oracle(w, tmax),
        "buildingset": _suite_buildingset,
        "poincare": _suite_poincare,
    }
    for name in ordered:
        start = time.perf_counter()
        report.results.extend(runners[name](ws))
        report.durations[name] = time.perf_counter() - start
    return report
