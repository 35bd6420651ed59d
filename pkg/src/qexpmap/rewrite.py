"""Noncommutative normal-ordering engine over a presented algebra.

A presentation fixes an ordered list of generators (ordinary, invertible
or scaling), one swap rule per out-of-order adjacent pair of ordinary
generators, and a commutation factor for each scaling/ordinary pair.
Normal ordering rewrites any word into the PBW normal form, leftmost
innermost, with immediate like-term collection.  Termination is enforced
by a term-count guard rather than a proof; ``confluence_check`` validates
order-independence empirically.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .scalars import (FracScalar, HalfLaurent, scalar_is_zero, scalar_to_json,
                      scalar_from_json, NumericParams, eval_numeric)

ORDINARY = "ordinary"
INVERTIBLE = "invertible"
SCALING = "scaling"

DEFAULT_GUARD = 10 ** 6


def term_guard() -> int:
    return int(os.environ.get("QEXPMAP_GUARD", DEFAULT_GUARD))


class RewriteError(Exception):
    pass


class GuardExceeded(RewriteError):
    """A single normal ordering generated more intermediate terms than allowed."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class Presentation:
    """Ordered generators + swap rules + scaling commutation factors.

    rules maps (hi, lo) -> (kappa, correction) encoding hi*lo ->
    kappa*lo*hi + correction, correction a tuple of (coeff, atoms).
    scaling maps (scal, other) -> HalfLaurent monomial mu, the factor per
    *half* power: G^s * x = mu^(2s) * x * G^s.
    """

    def __init__(self, name, generators, rules, scaling=None, lambda_one=False):
        self.name = name
        self.generators = tuple(generators)
        self.order = {g: i for i, (g, _) in enumerate(self.generators)}
        self.kind = dict(self.generators)
        self.rules = dict(rules)
        self.scaling = dict(scaling or {})
        self.lambda_one = lambda_one
        self._unit_rules = {}
        ordinaries = [g for g, k in self.generators if k != SCALING]
        for i, lo in enumerate(ordinaries):
            for hi in ordinaries[i + 1:]:
                if (hi, lo) not in self.rules:
                    raise ValueError(f"missing swap rule for pair ({hi}, {lo})")

    def gen_names(self):
        return [g for g, _ in self.generators]

    def is_scaling(self, g) -> bool:
        return self.kind[g] == SCALING

    def is_invertible(self, g) -> bool:
        return self.kind[g] in (INVERTIBLE, SCALING)

    def mu(self, scal, other) -> HalfLaurent:
        return self.scaling.get((scal, other), HalfLaurent.one())

    # -- unit rules for all sign combinations ------------------------------

    def unit_rule(self, g1, s1, g2, s2):
        """Expansion of g1^s1 * g2^s2 (signs +-1, order(g1) > order(g2))
        as a list of (coeff, atoms) already in lower order."""
        key = (g1, s1, g2, s2)
        cached = self._unit_rules.get(key)
        if cached is not None:
            return cached
        kappa, corr = self.rules[(g1, g2)]
        rule = (kappa, tuple(corr))
        y, x = (g1, 1), (g2, 1)
        if s2 == -1:
            if not self.is_invertible(g2):
                raise RewriteError(f"negative power of non-invertible {g2}")
            rule = _invert_lower(rule, x)
            x = (g2, -1)
        if s1 == -1:
            if not self.is_invertible(g1):
                raise RewriteError(f"negative power of non-invertible {g1}")
            rule = _invert_upper(rule, y)
            y = (g1, -1)
        kappa, corr = rule
        out = [(kappa, (x, y))] + [(c, w) for c, w in corr]
        self._unit_rules[key] = out
        return out


def _invert_lower(rule, x):
    """From Y X = kappa X Y + C derive Y X^-1 = kappa^-1 X^-1 Y
    - kappa^-1 X^-1 C X^-1."""
    kappa, corr = rule
    ki = kappa.inverse() if isinstance(kappa, FracScalar) else FracScalar(kappa).inverse()
    xi = (x[0], -x[1])
    new_corr = tuple((-(ki * c), (xi,) + tuple(w) + (xi,)) for c, w in corr)
    return (ki, new_corr)


def _invert_upper(rule, y):
    """From Y X = kappa X Y + C derive Y^-1 X = kappa^-1 X Y^-1
    - kappa^-1 Y^-1 C Y^-1."""
    kappa, corr = rule
    ki = kappa.inverse() if isinstance(kappa, FracScalar) else FracScalar(kappa).inverse()
    yi = (y[0], -y[1])
    new_corr = tuple((-(ki * c), (yi,) + tuple(w) + (yi,)) for c, w in corr)
    return (ki, new_corr)


# ---------------------------------------------------------------------------
# the reduction engine


def _find_event(pres, atoms):
    """First reducible position: ('merge', i) or ('swap', i), else None."""
    for i in range(len(atoms) - 1):
        g1, g2 = atoms[i][0], atoms[i + 1][0]
        if g1 == g2:
            return ("merge", i)
        if pres.order[g1] > pres.order[g2]:
            return ("swap", i)
    return None


def _apply_event(pres, coeff, atoms, event):
    """Expand one reduction step; returns a list of (coeff, atoms) terms."""
    kind, i = event
    (g1, e1), (g2, e2) = atoms[i], atoms[i + 1]
    if kind == "merge":
        e = e1 + e2
        mid = ((g1, e),) if e else ()
        return [(coeff, atoms[:i] + mid + atoms[i + 2:])]

    s1_scal, s2_scal = pres.is_scaling(g1), pres.is_scaling(g2)
    if s1_scal and s2_scal:
        # distinct scaling generators commute
        return [(coeff, atoms[:i] + ((g2, e2), (g1, e1)) + atoms[i + 2:])]
    if s1_scal or s2_scal:
        if s1_scal:
            scal, sexp, other, oexp = g1, e1, g2, e2
            h = 2 * sexp * oexp       # move G^sexp right past other^oexp
        else:
            scal, sexp, other, oexp = g2, e2, g1, e1
            h = -2 * sexp * oexp      # move other^oexp right past G^sexp
        h = Fraction(h)
        if h.denominator != 1:
            raise RewriteError(
                f"scaling exponent {sexp} of {scal} is not a half-integer")
        factor = pres.mu(scal, other) ** int(h)
        return [(coeff * factor,
                 atoms[:i] + ((g2, e2), (g1, e1)) + atoms[i + 2:])]

    # ordinary-ordinary: peel one unit from the boundary of each run
    s1 = 1 if e1 > 0 else -1
    s2 = 1 if e2 > 0 else -1
    left = atoms[:i] + (((g1, e1 - s1),) if e1 != s1 else ())
    right = (((g2, e2 - s2),) if e2 != s2 else ()) + atoms[i + 2:]
    out = []
    for c, w in pres.unit_rule(g1, s1, g2, s2):
        out.append((coeff * c, left + tuple(w) + right))
    return out


def normal_order_terms(pres, terms, guard=None):
    """Rewrite raw (coeff, atoms) terms to a normal-form dict word -> coeff."""
    if guard is None:
        guard = term_guard()
    result = {}
    stack = [(c, tuple(a)) for c, a in terms]
    seen = 0
    while stack:
        coeff, atoms = stack.pop()
        seen += 1
        if seen > guard:
            raise GuardExceeded(
                f"normal ordering exceeded {guard} intermediate terms")
        if scalar_is_zero(coeff):
            continue
        atoms = tuple(a for a in atoms if a[1])
        event = _find_event(pres, atoms)
        if event is None:
            acc = result.get(atoms)
            acc = coeff if acc is None else acc + coeff
            if scalar_is_zero(acc):
                result.pop(atoms, None)
            else:
                result[atoms] = acc
            continue
        stack.extend(_apply_event(pres, coeff, atoms, event))
    return result


def _validate_atoms(pres, atoms):
    for g, e in atoms:
        if g not in pres.order:
            raise RewriteError(f"unknown generator {g!r}")
        e = Fraction(e)
        if pres.is_scaling(g):
            if (2 * e).denominator != 1:
                raise RewriteError(f"exponent {e} of scaling {g} not in (1/2)Z")
        elif e.denominator != 1:
            raise RewriteError(f"fractional power of non-scaling generator {g}")
        elif e < 0 and not pres.is_invertible(g):
            raise RewriteError(f"negative power of non-invertible {g}")


# ---------------------------------------------------------------------------
# NCPoly


def _word_sort_key(pres, word):
    return tuple((pres.order[g], e) for g, e in word)


class NCPoly:
    """Finite scalar-weighted sum of words over a presented algebra.

    Words are tuples of (generator, exponent).  Unless ``normalize=False``
    is requested (the parser uses it), terms are kept in PBW normal form.
    """

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms=None, normalize=True):
        if terms is None:
            terms = {}
        if isinstance(terms, dict):
            items = [(c, w) for w, c in terms.items()]
        else:
            items = list(terms)
        items = [(c, tuple((g, Fraction(e)) for g, e in atoms))
                 for c, atoms in items]
        for _, atoms in items:
            _validate_atoms(pres, atoms)
        if normalize:
            clean = normal_order_terms(pres, items)
        else:
            clean = {}
            for c, atoms in items:
                atoms = tuple(a for a in atoms if a[1])
                acc = clean.get(atoms)
                acc = c if acc is None else acc + c
                if scalar_is_zero(acc):
                    clean.pop(atoms, None)
                else:
                    clean[atoms] = acc
        self.pres = pres
        self.terms = clean

    # -- constructors

    @staticmethod
    def zero(pres) -> "NCPoly":
        return NCPoly(pres, {})

    @staticmethod
    def scalar(pres, c) -> "NCPoly":
        return NCPoly(pres, [(c, ())], normalize=False)

    @staticmethod
    def one(pres) -> "NCPoly":
        return NCPoly.scalar(pres, 1)

    @staticmethod
    def gen(pres, name, exp=1) -> "NCPoly":
        return NCPoly(pres, [(1, ((name, Fraction(exp)),))])

    # -- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_normal(self) -> bool:
        return all(_find_event(self.pres, w) is None for w in self.terms)

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.pres is not self.pres:
                raise RewriteError("mixing polynomials of different presentations")
            return other
        return NCPoly.scalar(self.pres, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w)
            acc = c if acc is None else acc + c
            if scalar_is_zero(acc):
                terms.pop(w, None)
            else:
                terms[w] = acc
        out = NCPoly(self.pres, {}, normalize=False)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = NCPoly(self.pres, {}, normalize=False)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        raw = []
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                raw.append((c1 * c2, w1 + w2))
        return NCPoly(self.pres, raw)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.invert() ** (-n)
        result = NCPoly.one(self.pres)
        for _ in range(n):
            result = result * self
        return result

    def invert(self) -> "NCPoly":
        """Inverse of a single-term monomial in invertible/scaling generators."""
        if len(self.terms) != 1:
            raise RewriteError("can only invert monomial elements")
        (word, coeff), = self.terms.items()
        for g, _ in word:
            if not self.pres.is_invertible(g):
                raise RewriteError(f"generator {g} is not invertible")
        if isinstance(coeff, (int, Fraction)):
            inv_c = Fraction(1) / coeff
        else:
            inv_c = coeff.inverse()
        inv_word = tuple((g, -e) for g, e in reversed(word))
        return NCPoly(self.pres, [(inv_c, inv_word)])

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RewriteError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # -- analysis helpers

    def normalized(self) -> "NCPoly":
        return NCPoly(self.pres, [(c, w) for w, c in self.terms.items()])

    def degree_in(self, names) -> int:
        names = set(names)
        deg = 0
        for w in self.terms:
            deg = max(deg, sum(int(e) for g, e in w if g in names))
        return deg if self.terms else 0

    def uses(self, name) -> bool:
        return any(g == name for w in self.terms for g, _ in w)

    def coeff_of(self, atoms):
        atoms = tuple((g, Fraction(e)) for g, e in atoms)
        return self.terms.get(atoms, 0)

    def map_coeffs(self, fn) -> "NCPoly":
        out = NCPoly(self.pres, {}, normalize=False)
        out.terms = {w: fn(c) for w, c in self.terms.items()
                     if not scalar_is_zero(fn(c))}
        return out

    def eval_coeffs(self, params: NumericParams):
        """Numeric coefficient map {word: float} at a parameter point."""
        return {w: eval_numeric(c, params) for w, c in self.terms.items()}

    # -- serialization / display

    def to_json(self):
        scal_gens = [g for g, k in self.pres.generators if k == SCALING]
        out = []
        for word in sorted(self.terms, key=lambda w: _word_sort_key(self.pres, w)):
            coeff = self.terms[word]
            dpow = Fraction(0)
            body = []
            for g, e in word:
                if scal_gens and g == scal_gens[0]:
                    dpow = e
                else:
                    e = Fraction(e)
                    body.append([g, int(e) if e.denominator == 1
                                 else f"{e.numerator}/{e.denominator}"])
            out.append({"dpow": f"{dpow.numerator}/{dpow.denominator}",
                        "word": body,
                        "coeff": scalar_to_json(coeff)})
        return out

    @staticmethod
    def from_json(pres, data) -> "NCPoly":
        scal_gens = [g for g, k in pres.generators if k == SCALING]
        raw = []
        for t in data:
            atoms = []
            dpow = Fraction(t.get("dpow", "0/1"))
            if dpow and scal_gens:
                atoms.append((scal_gens[0], dpow))
            for g, e in t["word"]:
                atoms.append((g, Fraction(e)))
            raw.append((scalar_from_json(t["coeff"]), tuple(atoms)))
        return NCPoly(pres, raw)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for word in sorted(self.terms, key=lambda w: _word_sort_key(self.pres, w)):
            coeff = self.terms[word]
            wstr = "*".join(
                g if e == 1 else
                (f"{g}^{e}" if Fraction(e).denominator == 1
                 else f"{g}^{Fraction(e).numerator}/{Fraction(e).denominator}")
                for g, e in word)
            cstr = str(coeff)
            if wstr:
                if cstr == "1":
                    pieces.append(wstr)
                elif cstr == "-1":
                    pieces.append(f"-{wstr}")
                else:
                    if ("+" in cstr or " - " in cstr or "/" in cstr) \
                            and not (cstr.startswith("(") and cstr.endswith(")")):
                        cstr = f"({cstr})"
                    pieces.append(f"{cstr}*{wstr}")
            else:
                pieces.append(cstr if "+" not in cstr else f"({cstr})")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"NCPoly<{self.pres.name}>({self})"


def normal_order(x: NCPoly, pres: Presentation = None) -> NCPoly:
    """Normal-order a polynomial (NCPoly normalizes eagerly; this re-runs it)."""
    return x.normalized()


# ---------------------------------------------------------------------------
# tensor powers


def leg_name(g: str, leg: int) -> str:
    return f"{g}@{leg}"


_TENSOR_CACHE = {}


def tensor_power(pres: Presentation, n: int) -> Presentation:
    """n-fold tensor power: one renamed copy of the presentation per leg,
    legs mutually commuting, leg-1 generators first."""
    cached = _TENSOR_CACHE.get((id(pres), n))
    if cached is not None:
        return cached
    gens = []
    for leg in range(1, n + 1):
        for g, k in pres.generators:
            gens.append((leg_name(g, leg), k))
    rules = {}
    ordinaries = [(g, k) for g, k in pres.generators if k != SCALING]
    for leg in range(1, n + 1):
        for (hi, lo), (kappa, corr) in pres.rules.items():
            new_corr = tuple(
                (c, tuple((leg_name(g, leg), e) for g, e in w)) for c, w in corr)
            rules[(leg_name(hi, leg), leg_name(lo, leg))] = (kappa, new_corr)
    one = FracScalar.one()
    for l2 in range(2, n + 1):
        for l1 in range(1, l2):
            for hi, _ in ordinaries:
                for lo, _ in ordinaries:
                    rules[(leg_name(hi, l2), leg_name(lo, l1))] = (one, ())
    scaling = {}
    for (s, x), mu in pres.scaling.items():
        for leg in range(1, n + 1):
            scaling[(leg_name(s, leg), leg_name(x, leg))] = mu
    out = Presentation(f"{pres.name}^x{n}", gens, rules, scaling,
                       lambda_one=pres.lambda_one)
    _TENSOR_CACHE[(id(pres), n)] = out
    return out


def tensor_square(pres: Presentation) -> Presentation:
    return tensor_power(pres, 2)


def embed_leg(poly: NCPoly, target: Presentation, leg: int) -> NCPoly:
    """Embed x as 1 x ... x x ... x 1 into a tensor power presentation."""
    raw = [(c, tuple((leg_name(g, leg), e) for g, e in w))
           for w, c in poly.terms.items()]
    return NCPoly(target, raw)


def tensor(x: NCPoly, y: NCPoly, target: Presentation) -> NCPoly:
    return embed_leg(x, target, 1) * embed_leg(y, target, 2)


def split_legs(word, nlegs: int):
    """Split a tensor-presentation word into per-leg words."""
    legs = [[] for _ in range(nlegs)]
    for g, e in word:
        base, _, leg = g.rpartition("@")
        legs[int(leg) - 1].append((base, e))
    return tuple(tuple(l) for l in legs)


# ---------------------------------------------------------------------------
# algebra homomorphisms


def hom_apply(poly: NCPoly, target: Presentation, images, scaling_images=None,
              on_missing=None) -> NCPoly:
    """Extend a generator assignment to an algebra map.

    images: ordinary generator -> NCPoly over target; negative exponents
    require a monomial (hence invertible) image.
    scaling_images: scaling generator -> list of target scaling generator
    names, each raised to the same exponent (exponent-preserving maps such
    as coproducts of group-like scaling generators).
    """
    scaling_images = scaling_images or {}
    result = NCPoly.zero(target)
    for word, coeff in poly.terms.items():
        factor = NCPoly.scalar(target, coeff)
        for g, e in word:
            if g in scaling_images:
                atoms = tuple((t, e) for t in scaling_images[g])
                factor = factor * NCPoly(target, [(1, atoms)])
                continue
            if g not in images:
                if on_missing:
                    on_missing(g)
                raise RewriteError(f"no image for generator {g}")
            img = images[g]
            e = Fraction(e)
            if e.denominator != 1:
                raise RewriteError(f"fractional power {e} of mapped generator {g}")
            e = int(e)
            factor = factor * (img ** e if e >= 0 else img.invert() ** (-e))
        result = result + factor
    return result


def scalar_hom(poly: NCPoly, values) -> object:
    """Algebra map to scalars (e.g. the counit); scaling generators must map
    to 1 and do so implicitly."""
    total = 0
    for word, coeff in poly.terms.items():
        val = coeff
        for g, e in word:
            v = values.get(g, 1)
            if v == 1:
                continue
            if scalar_is_zero(v):
                val = 0
                break
            e = Fraction(e)
            if e.denominator != 1:
                raise RewriteError(f"fractional power of {g} under scalar map")
            val = val * (v ** int(e))
        total = total + val if not scalar_is_zero(val) else total
    return total
