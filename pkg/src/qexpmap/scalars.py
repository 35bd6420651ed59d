"""Exact scalar arithmetic for the two-parameter quantum group kernel.

Three layers, each closed under the operations the algebra engines need:

* ``HalfLaurent``   -- Laurent polynomials in Q^(1/2) and lambda^(1/2) over
  the rationals.  Exponents are stored as integers counting *half* powers,
  so every exponent occurring in the T/L/R matrices is exactly representable.
* ``FracScalar``    -- the fraction field of HalfLaurent.  There is no
  multivariate GCD; equality is decided by cross-multiplication, and a cheap
  exact-division attempt keeps fractions from growing.
* ``RadScalar``     -- finite sums c * sqrt([n1]_Q ... [nk]_Q) with
  FracScalar coefficients.  Radicands are multisets of q-integer indices,
  which is closed under multiplication and has a canonical normal form.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
import math


class ScalarError(ArithmeticError):
    pass


class EvalError(ScalarError):
    """Numeric evaluation failed (vanishing denominator etc.)."""


# ---------------------------------------------------------------------------
# HalfLaurent


class HalfLaurent:
    """Laurent polynomial in half powers of Q and lambda.

    ``terms`` maps an exponent pair ``(u, v)`` to a nonzero Fraction; the
    pair denotes the monomial Q^(u/2) * lambda^(v/2).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[key] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors

    @staticmethod
    def const(c) -> "HalfLaurent":
        return HalfLaurent({(0, 0): Fraction(c)})

    @staticmethod
    def monomial(coeff, qhalf: int, lhalf: int) -> "HalfLaurent":
        return HalfLaurent({(int(qhalf), int(lhalf)): Fraction(coeff)})

    @staticmethod
    def zero() -> "HalfLaurent":
        return HalfLaurent()

    @staticmethod
    def one() -> "HalfLaurent":
        return HalfLaurent.const(1)

    # -- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    # -- ring operations

    def _coerce(self, other):
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return HalfLaurent.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            nc = terms.get(key, Fraction(0)) + c
            if nc:
                terms[key] = nc
            else:
                terms.pop(key, None)
        return HalfLaurent(terms)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self.terms.items()})

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
        terms = {}
        for (u1, v1), c1 in self.terms.items():
            for (u2, v2), c2 in other.terms.items():
                key = (u1 + u2, v1 + v2)
                nc = terms.get(key, Fraction(0)) + c1 * c2
                if nc:
                    terms[key] = nc
                else:
                    terms.pop(key, None)
        return HalfLaurent(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "HalfLaurent":
        if not self.is_monomial():
            raise ScalarError("only monomials are invertible in HalfLaurent")
        ((u, v), c), = self.terms.items()
        return HalfLaurent({(-u, -v): 1 / c})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- division

    def divexact(self, other: "HalfLaurent"):
        """Exact quotient self/other, or None if the division is not exact.

        Uses leading-term elimination in lex order on (u, v); quotient keys
        are confined to the componentwise box forced by exactness, which
        bounds the search.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero HalfLaurent")
        if self.is_zero():
            return HalfLaurent.zero()
        if other.is_monomial():
            return self * other.inverse()
        lt_b = max(other.terms)
        cb = other.terms[lt_b]
        au = [k[0] for k in self.terms]
        av = [k[1] for k in self.terms]
        bu = [k[0] for k in other.terms]
        bv = [k[1] for k in other.terms]
        box = (min(au) - max(bu), max(au) - min(bu),
               min(av) - max(bv), max(av) - min(bv))
        rem = dict(self.terms)
        quo = {}
        while rem:
            lt_a = max(rem)
            key = (lt_a[0] - lt_b[0], lt_a[1] - lt_b[1])
            if not (box[0] <= key[0] <= box[1] and box[2] <= key[1] <= box[3]):
                return None
            coeff = rem[lt_a] / cb
            quo[key] = coeff
            for k, c in other.terms.items():
                kk = (k[0] + key[0], k[1] + key[1])
                nc = rem.get(kk, Fraction(0)) - coeff * c
                if nc:
                    rem[kk] = nc
                else:
                    rem.pop(kk, None)
        return HalfLaurent(quo)

    # -- substitutions / evaluation

    def subs_lambda_one(self) -> "HalfLaurent":
        terms = {}
        for (u, v), c in self.terms.items():
            key = (u, 0)
            nc = terms.get(key, Fraction(0)) + c
            if nc:
                terms[key] = nc
            else:
                terms.pop(key, None)
        return HalfLaurent(terms)

    def eval_numeric(self, params: "NumericParams") -> float:
        total = 0.0
        for (u, v), c in self.terms.items():
            total += float(c) * params.Q ** (u / 2.0) * params.lam ** (v / 2.0)
        return total

    # -- serialization

    def to_json(self):
        out = []
        for (u, v) in sorted(self.terms):
            c = self.terms[(u, v)]
            out.append({"num": c.numerator, "den": c.denominator,
                        "qhalf": u, "lhalf": v})
        return out

    @staticmethod
    def from_json(data) -> "HalfLaurent":
        terms = {}
        for t in data:
            terms[(t["qhalf"], t["lhalf"])] = Fraction(t["num"], t["den"])
        return HalfLaurent(terms)

    def __repr__(self):
        return f"HalfLaurent({render_halflaurent(self)})"

    def __str__(self):
        return render_halflaurent(self)


# convenient monomial builders: p = Q*lambda, q = Q/lambda

def Q_pow(half: int) -> HalfLaurent:
    return HalfLaurent.monomial(1, half, 0)


def lam_pow(half: int) -> HalfLaurent:
    return HalfLaurent.monomial(1, 0, half)


def p_pow(n: int = 1) -> HalfLaurent:
    return HalfLaurent.monomial(1, 2 * n, 2 * n)


def q_pow(n: int = 1) -> HalfLaurent:
    return HalfLaurent.monomial(1, 2 * n, -2 * n)


_QINT_BASE = {"Q": (2, 0), "q": (2, -2), "generic-t-as-Q": (2, 0)}


def qint(n: int, variable: str = "Q") -> HalfLaurent:
    """The q-integer [n]_t = (t^n - t^-n)/(t - t^-1) as a Laurent polynomial.

    For n > 0 this is sum_{i=0..n-1} t^(n-1-2i); it is antisymmetric in n.
    """
    bu, bv = _QINT_BASE[variable]
    n = int(n)
    sign = 1
    if n < 0:
        n, sign = -n, -1
    terms = {}
    for i in range(n):
        e = n - 1 - 2 * i
        terms[(bu * e, bv * e)] = Fraction(sign)
    return HalfLaurent(terms)


def qfact(n: int, variable: str = "Q") -> HalfLaurent:
    """[n]! = [n][n-1]...[1]; [0]! = 1.  Negative n is a domain error."""
    if n < 0:
        raise ScalarError(f"qfact of negative integer {n}")
    result = HalfLaurent.one()
    for k in range(1, int(n) + 1):
        result = result * qint(k, variable)
    return result


# ---------------------------------------------------------------------------
# FracScalar


class FracScalar:
    """Element of the fraction field of HalfLaurent.

    No canonical form is maintained: equality is decided by
    cross-multiplication.  Construction attempts an exact division and
    otherwise normalizes the denominator's leading term to 1, which is
    enough to keep sizes stable in practice.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _to_halflaurent(num)
        den = HalfLaurent.one() if den is None else _to_halflaurent(den)
        if den.is_zero():
            raise ZeroDivisionError("FracScalar with zero denominator")
        if num.is_zero():
            den = HalfLaurent.one()
        elif not den.is_one():
            quo = num.divexact(den)
            if quo is not None:
                num, den = quo, HalfLaurent.one()
            else:
                lt = max(den.terms)
                scale = HalfLaurent.monomial(1 / den.terms[lt], -lt[0], -lt[1])
                num, den = num * scale, den * scale
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def zero() -> "FracScalar":
        return FracScalar(HalfLaurent.zero())

    @staticmethod
    def one() -> "FracScalar":
        return FracScalar(HalfLaurent.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_monomial(self) -> bool:
        return self.num.is_monomial() and self.den.is_monomial()

    def _coerce(self, other):
        if isinstance(other, FracScalar):
            return other
        if isinstance(other, (int, Fraction, HalfLaurent)):
            return FracScalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return FracScalar(self.num + other.num, self.den)
        return FracScalar(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FracScalar(-self.num, self.den)

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
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        # cross-cancel cheaply before multiplying out
        if not d2.is_one():
            quo = n1.divexact(d2)
            if quo is not None:
                n1, d2 = quo, HalfLaurent.one()
        if not d1.is_one():
            quo = n2.divexact(d1)
            if quo is not None:
                n2, d1 = quo, HalfLaurent.one()
        return FracScalar(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "FracScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero FracScalar")
        return FracScalar(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = FracScalar.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # no canonical form; unsafe to hash

    def eval_numeric(self, params: "NumericParams") -> float:
        d = self.den.eval_numeric(params)
        if abs(d) < 1e-300:
            raise EvalError(f"denominator {self.den} vanishes at {params}")
        return self.num.eval_numeric(params) / d

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data) -> "FracScalar":
        return FracScalar(HalfLaurent.from_json(data["num"]),
                          HalfLaurent.from_json(data["den"]))

    def __repr__(self):
        return f"FracScalar({self})"

    def __str__(self):
        if self.den.is_one():
            return render_halflaurent(self.num)
        return (f"({render_halflaurent(self.num)})/"
                f"({render_halflaurent(self.den)})")


def _to_halflaurent(x) -> HalfLaurent:
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, (int, Fraction)):
        return HalfLaurent.const(x)
    raise TypeError(f"cannot interpret {x!r} as HalfLaurent")


# ---------------------------------------------------------------------------
# RadScalar


class RadScalar:
    """Sum of terms c * sqrt([n1]_Q * ... * [nk]_Q), c a FracScalar.

    Normal form: every radicand multiset is square-free (paired indices are
    extracted as q-integer factors into the coefficient) and at most one
    term per distinct radicand is kept.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        bucket = {}
        for coeff, rad in terms:
            if not isinstance(coeff, FracScalar):
                coeff = FracScalar(coeff)
            newrad = []
            for n, cnt in sorted(Counter(rad).items()):
                n = int(n)
                if n == 0:
                    coeff = FracScalar.zero()
                    break
                if n == 1:
                    continue
                if n < 0:
                    raise ScalarError(f"negative q-integer index {n} in radicand")
                pairs, odd = divmod(cnt, 2)
                if pairs:
                    coeff = coeff * FracScalar(qint(n)) ** pairs
                if odd:
                    newrad.append(n)
            if coeff.is_zero():
                continue
            key = tuple(newrad)
            if key in bucket:
                bucket[key] = bucket[key] + coeff
            else:
                bucket[key] = coeff
        object.__setattr__(
            self, "terms",
            tuple((c, k) for k, c in sorted(bucket.items()) if not c.is_zero()))

    @staticmethod
    def zero() -> "RadScalar":
        return RadScalar()

    @staticmethod
    def one() -> "RadScalar":
        return RadScalar([(FracScalar.one(), ())])

    @staticmethod
    def sqrt_qints(indices, coeff=1) -> "RadScalar":
        """coeff * sqrt(prod [n]_Q for n in indices)."""
        return RadScalar([(FracScalar(coeff) if not isinstance(coeff, FracScalar)
                           else coeff, tuple(indices))])

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return (len(self.terms) == 1 and self.terms[0][1] == ()
                and self.terms[0][0].is_one())

    def is_rational_part(self):
        """The coefficient if radical-free, else None."""
        if self.is_zero():
            return FracScalar.zero()
        if len(self.terms) == 1 and self.terms[0][1] == ():
            return self.terms[0][0]
        return None

    def _coerce(self, other):
        if isinstance(other, RadScalar):
            return other
        if isinstance(other, (int, Fraction, HalfLaurent, FracScalar)):
            return RadScalar([(FracScalar(other) if not isinstance(other, FracScalar)
                               else other, ())])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RadScalar(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        return RadScalar([(-c, r) for c, r in self.terms])

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
        out = []
        for c1, r1 in self.terms:
            for c2, r2 in other.terms:
                out.append((c1 * c2, r1 + r2))
        return RadScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = RadScalar.one()
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "RadScalar":
        """Inverse of a single-term radical: 1/(c sqrt(r)) = sqrt(r)/(c prod[n])."""
        if len(self.terms) != 1:
            raise ScalarError("can only invert single-term RadScalar values")
        c, rad = self.terms[0]
        denom = c
        for n in rad:
            denom = denom * FracScalar(qint(n))
        return RadScalar([(denom.inverse(), rad)])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        diff = self - other
        return diff.is_zero()

    __hash__ = None

    def eval_numeric(self, params: "NumericParams") -> float:
        total = 0.0
        for c, rad in self.terms:
            val = c.eval_numeric(params)
            for n in rad:
                qn = qint(n).eval_numeric(params)
                if qn < 0:
                    raise EvalError(f"negative radicand [{n}] at {params}")
                val *= math.sqrt(qn)
            total += val
        return total

    def to_json(self):
        return [{"coeff": c.to_json(), "rad": list(r)} for c, r in self.terms]

    @staticmethod
    def from_json(data) -> "RadScalar":
        return RadScalar([(FracScalar.from_json(t["coeff"]), tuple(t["rad"]))
                          for t in data])

    def __repr__(self):
        return f"RadScalar({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for c, rad in self.terms:
            s = str(c)
            if rad:
                s = f"({s})*sqrt(" + "*".join(f"[{n}]" for n in rad) + ")"
            parts.append(s)
        return " + ".join(parts)


def rad_normalize(x: RadScalar) -> RadScalar:
    """Re-normalize a RadScalar (construction already normalizes; idempotent)."""
    return RadScalar(list(x.terms))


# ---------------------------------------------------------------------------
# numeric parameters


class NumericParams:
    """A numeric parameter point (p, q) with derived Q = sqrt(pq), lam = sqrt(p/q).

    Rejects non-generic points where some [n]_Q with n <= nmax nearly
    vanishes, since exact identities are only claimed for generic parameters.
    """

    __slots__ = ("p", "q", "Q", "lam")

    def __init__(self, p, q, nmax: int = 9):
        p, q = float(p), float(q)
        if p <= 0 or q <= 0:
            raise ScalarError("parameters p, q must be positive")
        self.p, self.q = p, q
        self.Q = math.sqrt(p * q)
        self.lam = math.sqrt(p / q)
        for n in range(1, nmax + 1):
            if abs(self.Q ** n - self.Q ** (-n)) < 1e-9 * max(1.0, self.Q ** n):
                raise ScalarError(f"non-generic parameters: [{n}]_Q ~ 0")

    def __repr__(self):
        return f"NumericParams(p={self.p}, q={self.q})"


def eval_numeric(x, params: NumericParams) -> float:
    """Evaluate any scalar-tower value at a numeric parameter point."""
    if isinstance(x, (int, Fraction)):
        return float(x)
    return x.eval_numeric(params)


# ---------------------------------------------------------------------------
# coercion helpers shared with the rewriting engine


_LEVEL = {int: 0, Fraction: 0, HalfLaurent: 1, FracScalar: 2, RadScalar: 3}


def scalar_level(x) -> int:
    return _LEVEL[type(x)]


def lift_scalar(x, level: int):
    """Lift x up the tower to the given level."""
    cur = scalar_level(x)
    if cur > level:
        raise ScalarError("cannot lower a scalar down the tower")
    while cur < level:
        if cur == 0:
            x = HalfLaurent.const(x)
        elif cur == 1:
            x = FracScalar(x)
        else:
            x = RadScalar([(x, ())])
        cur += 1
    return x


def scalar_is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def scalar_lambda_one(x):
    """Substitute lambda = 1 anywhere in the scalar tower."""
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, HalfLaurent):
        return x.subs_lambda_one()
    if isinstance(x, FracScalar):
        return FracScalar(x.num.subs_lambda_one(), x.den.subs_lambda_one())
    if isinstance(x, RadScalar):
        return RadScalar([(scalar_lambda_one(c), rad) for c, rad in x.terms])
    raise ScalarError(f"unexpected scalar type {type(x).__name__}")


def scalar_to_json(x):
    if isinstance(x, (int, Fraction)):
        x = HalfLaurent.const(x)
    return x.to_json()


def scalar_from_json(data):
    """Infer the scalar type from the JSON shape (fixed schemas per type)."""
    if isinstance(data, dict):
        return FracScalar.from_json(data)
    if isinstance(data, list):
        if data and "rad" in data[0]:
            return RadScalar.from_json(data)
        return HalfLaurent.from_json(data)
    raise ValueError(f"unrecognized scalar JSON: {data!r}")


# ---------------------------------------------------------------------------
# rendering


def _render_exp(half: int) -> str:
    f = Fraction(half, 2)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _render_mono(u: int, v: int, lambda_one: bool = False) -> str:
    if lambda_one:
        # p and q coincide, so Q = q; render powers of q directly
        if u == 0:
            return "1"
        return "q" if u == 2 else f"q^{_render_exp(u)}"
    if u == 0 and v == 0:
        return "1"
    # prefer p/q form when both exponents are integral
    x, y = Fraction(u + v, 4), Fraction(u - v, 4)
    factors = []
    if x.denominator == 1 and y.denominator == 1:
        if x:
            factors.append("p" if x == 1 else f"p^{x}")
        if y:
            factors.append("q" if y == 1 else f"q^{y}")
    else:
        if u:
            factors.append("Q" if u == 2 else f"Q^{_render_exp(u)}")
        if v:
            factors.append("lambda" if v == 2 else f"lambda^{_render_exp(v)}")
    return "*".join(factors) if factors else "1"


def render_halflaurent(x: HalfLaurent, lambda_one: bool = False) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for (u, v) in sorted(x.terms, reverse=True):
        c = x.terms[(u, v)]
        mono = _render_mono(u, v, lambda_one)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
