"""Exact sparse polynomial and rational-function arithmetic.

Four immutable value types:

  LaurentPoly  elements of Z[q, 1/q], sparse map exponent -> coefficient
  PolyQT       elements of Z[q, T], sparse map (q_exp, T_exp) -> coefficient
  RationalQT   quotients of PolyQT; normalized but not fully reduced, so
               equality is decided by cross-multiplication
  RationalS    elements of Q(s), fully reduced, denominator kept monic

There is deliberately no general multivariate gcd: RationalQT only cancels
shared monomials, integer content, and explicitly supplied factors.  Display
conventions are fixed here once: terms are ordered by total degree, highest
first, then by increasing T exponent, and rendered like
"q^4 - 7*q^3 + 19*q^2 - 23*q + 10" or "3*q^4*T^3".
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InexactDivision, NotExpandable, PoleAtZero


def _render_terms(terms):
    """Render (coefficient, monomial-string) pairs, already ordered."""
    terms = list(terms)
    if not terms:
        return "0"
    pieces = []
    for coeff, mono in terms:
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


def _power_str(var, exp):
    return var if exp == 1 else f"{var}^{exp}"


class LaurentPoly:
    """Sparse integer Laurent polynomial in q."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in (coeffs.items() if hasattr(coeffs, "items") else coeffs):
                if v:
                    c[int(e)] = c.get(int(e), 0) + int(v)
                    if not c[int(e)]:
                        del c[int(e)]
        self._c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, n):
        return cls({0: n})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, coeff, exp):
        return cls({exp: coeff})

    @classmethod
    def q_power(cls, exp):
        return cls({exp: 1})

    @property
    def is_zero(self):
        return not self._c

    @property
    def min_exp(self):
        return min(self._c)

    @property
    def max_exp(self):
        return max(self._c)

    def coefficient(self, exp):
        return self._c.get(exp, 0)

    def terms(self):
        """Items in display order: exponent descending."""
        return sorted(self._c.items(), key=lambda kv: -kv[0])

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            else:
                c.pop(e, None)
        out = LaurentPoly.zero()
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.zero()
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                nv = c.get(e, 0) + v1 * v2
                if nv:
                    c[e] = nv
                else:
                    c.pop(e, None)
        out = LaurentPoly.zero()
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def shift(self, k):
        """Multiply by q^k."""
        out = LaurentPoly.zero()
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def substitute_inverse(self):
        """q -> 1/q."""
        out = LaurentPoly.zero()
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def evaluate(self, x):
        """Exact value at a rational point (nonzero if negative exponents occur)."""
        x = Fraction(x)
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * x ** e
        return total

    def at_one(self):
        return sum(self._c.values())

    def divide_exact(self, other):
        """Exact quotient in Z[q, 1/q]; raises InexactDivision otherwise."""
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        sv, ov = self.min_exp, other.min_exp
        rem = {e - sv: Fraction(v) for e, v in self._c.items()}
        div = {e - ov: v for e, v in other._c.items()}
        dd = max(div)
        lead = div[dd]
        quot = {}
        while rem:
            dr = max(rem)
            if dr < dd:
                raise InexactDivision(f"({self}) not divisible by ({other})")
            f = rem[dr] / lead
            quot[dr - dd] = f
            for e, v in div.items():
                ne = dr - dd + e
                nv = rem.get(ne, Fraction(0)) - f * v
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        if any(f.denominator != 1 for f in quot.values()):
            raise InexactDivision(f"({self}) not divisible by ({other}) over Z")
        return LaurentPoly({e + sv - ov: int(f) for e, f in quot.items()})

    def to_poly_qt(self, t_exp=0):
        """View as an element of Z[q, T] (requires nonnegative exponents)."""
        if self._c and self.min_exp < 0:
            raise ValueError("negative q exponent cannot enter Z[q, T]")
        return PolyQT({(e, t_exp): v for e, v in self._c.items()})

    def to_json(self):
        return [[e, str(v)] for e, v in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(v) for e, v in data})

    def __str__(self):
        return _render_terms((v, _power_str("q", e) if e else "")
                             for e, v in self.terms())

    def __repr__(self):
        return f"LaurentPoly({self})"


def q_analogue(n):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q-analogue of a negative integer")
    return LaurentPoly({e: 1 for e in range(n)})


Q_MINUS_ONE = LaurentPoly({1: 1, 0: -1})


def _qt_display_key(monomial):
    qe, te = monomial
    return (-(qe + te), te)


class PolyQT:
    """Sparse integer polynomial in q and T (nonnegative exponents)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for m, v in (coeffs.items() if hasattr(coeffs, "items") else coeffs):
                if v:
                    m = (int(m[0]), int(m[1]))
                    if m[0] < 0 or m[1] < 0:
                        raise ValueError("PolyQT exponents must be nonnegative")
                    c[m] = c.get(m, 0) + int(v)
                    if not c[m]:
                        del c[m]
        self._c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, n):
        return cls({(0, 0): n})

    @classmethod
    def term(cls, coeff, q_exp, t_exp):
        return cls({(q_exp, t_exp): coeff})

    @classmethod
    def binomial_q_minus_t(cls, b, a):
        """q^b - T^a."""
        return cls({(b, 0): 1, (0, a): -1})

    @property
    def is_zero(self):
        return not self._c

    @property
    def q_degree(self):
        return max(m[0] for m in self._c)

    @property
    def t_degree(self):
        return max(m[1] for m in self._c)

    @property
    def min_q_exp(self):
        return min(m[0] for m in self._c)

    @property
    def min_t_exp(self):
        return min(m[1] for m in self._c)

    def terms(self):
        """Items in display order: total degree descending, then T exponent ascending."""
        return sorted(self._c.items(), key=lambda kv: _qt_display_key(kv[0]))

    def content(self):
        return math.gcd(*self._c.values()) if self._c else 0

    def _coerce(self, other):
        if isinstance(other, PolyQT):
            return other
        if isinstance(other, int):
            return PolyQT.const(other)
        if isinstance(other, LaurentPoly):
            return other.to_poly_qt()
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for m, v in other._c.items():
            nv = c.get(m, 0) + v
            if nv:
                c[m] = nv
            else:
                c.pop(m, None)
        out = PolyQT.zero()
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PolyQT.zero()
        out._c = {m: -v for m, v in self._c.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = {}
        for (q1, t1), v1 in self._c.items():
            for (q2, t2), v2 in other._c.items():
                m = (q1 + q2, t1 + t2)
                nv = c.get(m, 0) + v1 * v2
                if nv:
                    c[m] = nv
                else:
                    c.pop(m, None)
        out = PolyQT.zero()
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyQT.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def shift(self, q_exp, t_exp):
        """Multiply by the monomial q^q_exp T^t_exp (may be negative if exponents stay >= 0)."""
        out = {}
        for (qe, te), v in self._c.items():
            m = (qe + q_exp, te + t_exp)
            if m[0] < 0 or m[1] < 0:
                raise ValueError("shift would create a negative exponent")
            out[m] = v
        result = PolyQT.zero()
        result._c = out
        return result

    def reversed_within(self, q_deg, t_deg):
        """P(1/q, 1/T) * q^q_deg * T^t_deg, for q_deg/t_deg at least the degrees."""
        out = {}
        for (qe, te), v in self._c.items():
            m = (q_deg - qe, t_deg - te)
            if m[0] < 0 or m[1] < 0:
                raise ValueError("reversal bounds below the actual degrees")
            out[m] = v
        result = PolyQT.zero()
        result._c = out
        return result

    def coefficients_by_t(self):
        """Split into {T exponent: LaurentPoly in q}."""
        rows = {}
        for (qe, te), v in self._c.items():
            rows.setdefault(te, {})[qe] = v
        return {te: LaurentPoly(c) for te, c in rows.items()}

    def leading_monomial(self):
        """Largest monomial in lex order with T before q."""
        return max(self._c, key=lambda m: (m[1], m[0]))

    def divide_exact(self, divisor):
        """Exact quotient in Z[q, T], or None if the division is not exact."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return PolyQT.zero()
        lead = divisor.leading_monomial()
        lc = divisor._c[lead]
        rem = dict(self._c)
        quot = {}
        while rem:
            m = max(rem, key=lambda t: (t[1], t[0]))
            c = rem[m]
            if m[0] < lead[0] or m[1] < lead[1] or c % lc:
                return None
            f = c // lc
            qm = (m[0] - lead[0], m[1] - lead[1])
            quot[qm] = quot.get(qm, 0) + f
            for dm, dv in divisor._c.items():
                mm = (qm[0] + dm[0], qm[1] + dm[1])
                nv = rem.get(mm, 0) - f * dv
                if nv:
                    rem[mm] = nv
                else:
                    rem.pop(mm, None)
        out = PolyQT.zero()
        out._c = quot
        return out

    def evaluate(self, q_val, t_val):
        """Exact value at rational (q, T)."""
        q_val, t_val = Fraction(q_val), Fraction(t_val)
        total = Fraction(0)
        for (qe, te), v in self._c.items():
            total += v * q_val ** qe * t_val ** te
        return total

    def to_json(self):
        return [[qe, te, str(v)] for (qe, te), v in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls({(int(qe), int(te)): int(v) for qe, te, v in data})

    def _monomial_str(self, monomial):
        qe, te = monomial
        parts = []
        if qe:
            parts.append(_power_str("q", qe))
        if te:
            parts.append(_power_str("T", te))
        return "*".join(parts)

    def __str__(self):
        return _render_terms((v, self._monomial_str(m)) for m, v in self.terms())

    def __repr__(self):
        return f"PolyQT({self})"


def _as_poly_qt(value):
    if isinstance(value, PolyQT):
        return value
    if isinstance(value, int):
        return PolyQT.const(value)
    if isinstance(value, LaurentPoly):
        return value.to_poly_qt()
    raise TypeError(f"cannot interpret {type(value).__name__} as a PolyQT")


class RationalQT:
    """Quotient of two PolyQT values.

    Normalization: shared monomial factors and integer content cancelled,
    denominator's leading coefficient (lex order, T before q) positive.
    Beyond explicitly supplied factors, no polynomial cancellation is
    attempted, so cross-multiplication is the only trusted equality test.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, cancel=()):
        if den is None:
            den = PolyQT.one()
        num = _as_poly_qt(num)
        den = _as_poly_qt(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = PolyQT.zero()
            self.den = PolyQT.one()
            return
        for factor in cancel:
            while True:
                qn = num.divide_exact(factor)
                if qn is None:
                    break
                qd = den.divide_exact(factor)
                if qd is None:
                    break
                num, den = qn, qd
        mq = min(num.min_q_exp, den.min_q_exp)
        mt = min(num.min_t_exp, den.min_t_exp)
        if mq or mt:
            num = num.shift(-mq, -mt)
            den = den.shift(-mq, -mt)
        g = math.gcd(num.content(), den.content())
        if den._c[den.leading_monomial()] < 0:
            g = -g
        if g != 1:
            num = PolyQT({m: v // g for m, v in num._c.items()})
            den = PolyQT({m: v // g for m, v in den._c.items()})
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(PolyQT.zero())

    @classmethod
    def one(cls):
        return cls(PolyQT.one())

    @classmethod
    def from_laurent(cls, lp, q_shift=0):
        """lp * q^q_shift as a rational function."""
        shift = q_shift + (min(lp.min_exp, 0) if not lp.is_zero else 0)
        base = lp.shift(-min(lp.min_exp, 0)) if not lp.is_zero else lp
        num = base.to_poly_qt()
        if shift >= 0:
            return cls(num.shift(shift, 0))
        return cls(num, PolyQT.term(1, -shift, 0))

    @property
    def is_zero(self):
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RationalQT):
            return other
        if isinstance(other, (int, PolyQT)):
            return RationalQT(other)
        if isinstance(other, LaurentPoly):
            return RationalQT.from_laurent(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalQT(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQT(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalQT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalQT(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def substitute_inverse(self):
        """(q, T) -> (1/q, 1/T)."""
        if self.is_zero:
            return RationalQT.zero()
        nq, nt = self.num.q_degree, self.num.t_degree
        dq, dt = self.den.q_degree, self.den.t_degree
        num = self.num.reversed_within(nq, nt)
        den = self.den.reversed_within(dq, dt)
        sq, st = dq - nq, dt - nt
        if sq >= 0:
            num = num.shift(sq, 0)
        else:
            den = den.shift(-sq, 0)
        if st >= 0:
            num = num.shift(0, st)
        else:
            den = den.shift(0, -st)
        return RationalQT(num, den)

    def series_coefficients(self, order):
        """First order+1 coefficients of the T-adic expansion, as LaurentPoly in q."""
        den_rows = self.den.coefficients_by_t()
        d0 = den_rows.get(0)
        if d0 is None:
            raise NotExpandable("denominator vanishes at T = 0")
        num_rows = self.num.coefficients_by_t()
        coeffs = []
        for k in range(order + 1):
            acc = num_rows.get(k, LaurentPoly.zero())
            for j in range(1, k + 1):
                dj = den_rows.get(j)
                if dj is not None:
                    acc = acc - dj * coeffs[k - j]
            try:
                coeffs.append(acc.divide_exact(d0))
            except InexactDivision as exc:
                raise NotExpandable(
                    "T-adic coefficients leave Z[q, 1/q]") from exc
        return coeffs

    def at_t_zero(self):
        """Exact value at T = 0, as a LaurentPoly in q."""
        den_rows = self.den.coefficients_by_t()
        d0 = den_rows.get(0)
        if d0 is None:
            raise PoleAtZero("denominator vanishes at T = 0")
        num0 = self.num.coefficients_by_t().get(0, LaurentPoly.zero())
        return num0.divide_exact(d0)

    def evaluate(self, q_val, t_val):
        """Exact value at rational (q, T) away from poles."""
        dv = self.den.evaluate(q_val, t_val)
        if dv == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate(q_val, t_val) / dv

    def to_json(self):
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(PolyQT.from_json(data["numerator"]),
                   PolyQT.from_json(data["denominator"]))

    def __str__(self):
        if self.den == PolyQT.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalQT({self})"


def _s_trim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return c


def _s_add(a, b):
    n = max(len(a), len(b))
    return _s_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                    for i in range(n)])


def _s_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _s_trim(out)


def _s_divmod(a, b):
    a = [Fraction(x) for x in a]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and _s_trim(a):
        a = _s_trim(a)
        if len(a) < len(b):
            break
        f = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = f
        for i, y in enumerate(b):
            a[shift + i] -= f * y
        a = _s_trim(a)
    return _s_trim(quot), _s_trim(a)


def _s_gcd(a, b):
    a, b = _s_trim(a), _s_trim(b)
    while b:
        a, b = b, _s_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


class RationalS:
    """Fully reduced rational function of s over Q, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _s_trim([Fraction(x) for x in num])
        den = _s_trim([Fraction(x) for x in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = ()
            self.den = (Fraction(1),)
            return
        g = _s_gcd(num, den)
        if len(g) > 1:
            num = _s_divmod(num, g)[0]
            den = _s_divmod(den, g)[0]
        lead = den[-1]
        self.num = tuple(x / lead for x in num)
        self.den = tuple(x / lead for x in den)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def from_fraction(cls, value):
        return cls((Fraction(value),))

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def reciprocal_linear(cls, a, b):
        """1 / (a*s + b)."""
        return cls((1,), (b, a))

    @property
    def is_zero(self):
        return not self.num

    def _coerce(self, other):
        if isinstance(other, RationalS):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalS.from_fraction(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalS(_s_add(_s_mul(list(self.num), list(other.den)),
                                _s_mul(list(other.num), list(self.den))),
                         _s_mul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        return RationalS([-x for x in self.num], list(self.den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalS(_s_mul(list(self.num), list(other.num)),
                         _s_mul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalS(_s_mul(list(self.num), list(other.den)),
                         _s_mul(list(self.den), list(other.num)))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def value_at_zero(self):
        if not self.den[0]:
            raise PoleAtZero("pole at s = 0")
        if not self.num:
            return Fraction(0)
        return self.num[0] / self.den[0]

    def derivative_at_zero(self):
        if not self.den[0]:
            raise PoleAtZero("pole at s = 0")
        n0 = self.num[0] if self.num else Fraction(0)
        n1 = self.num[1] if len(self.num) > 1 else Fraction(0)
        d0 = self.den[0]
        d1 = self.den[1] if len(self.den) > 1 else Fraction(0)
        return (n1 * d0 - n0 * d1) / (d0 * d0)

    def evaluate(self, s_val):
        s_val = Fraction(s_val)
        dv = sum(c * s_val ** i for i, c in enumerate(self.den))
        if dv == 0:
            raise ZeroDivisionError("evaluation at a pole")
        nv = sum(c * s_val ** i for i, c in enumerate(self.num))
        return nv / dv

    def _integer_scaled(self):
        """(num_ints, den_ints) scaled to coprime integer coefficient lists."""
        allc = list(self.num) + list(self.den)
        lcm = 1
        for c in allc:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ni = [int(c * lcm) for c in self.num]
        di = [int(c * lcm) for c in self.den]
        g = math.gcd(*(abs(x) for x in ni + di))
        if di[-1] < 0:
            g = -g
        if g != 1:
            ni = [x // g for x in ni]
            di = [x // g for x in di]
        return ni, di

    def __str__(self):
        if self.is_zero:
            return "0"
        ni, di = self._integer_scaled()

        def render(ints):
            terms = [(v, _power_str("s", e) if e else "")
                     for e, v in sorted(enumerate(ints), key=lambda t: -t[0]) if v]
            return _render_terms(terms)

        if len(di) == 1 and di[0] == 1:
            return render(ni)
        return f"({render(ni)}) / ({render(di)})"

    def __repr__(self):
        return f"RationalS({self})"
