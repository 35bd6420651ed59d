"""Exponentiated corepresentation matrices, dual-pairing matrices and the
restricted universal intertwiner.

The central objects:

* t_matrix_closed / t_matrix_factorized: the spin-j matrix of coordinate
  algebra elements, either from the closed single-sum formula or as a
  product of two q-exponentials around a diagonal core.
* l_matrix: the upper/lower triangular matrices of dual algebra elements
  obtained by pushing the factorized matrix through the evaluation maps.
* r_matrix_rep: the intertwiner restricted to a pair of spin
  representations.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra_a import (a_parse, agen, apq_presentation, coproduct, counit,
                        exponential_coordinates)
from .algebra_u import (Rep, gamma_rep, hatted, pi_apply, u_coproduct,
                        u_parse, u_presentation, u_rep_apply)
from .matrices import Matrix
from .reporting import Identity
from .rewrite import NCPoly, RewriteError, embed_leg, tensor_square
from .scalars import (FracScalar, HalfLaurent, Q_pow, RadScalar, lam_pow,
                      qfact, qint)


def _fact_indices(n: int):
    """Indices whose q-integers multiply to [n]!; [1] = 1 is omitted."""
    return list(range(2, int(n) + 1))


def qexp(tsign: int, x: Matrix, one, bound: int = None) -> Matrix:
    """q-exponential E_{t^2}(x) = sum_n t^(-n(n-1)/2) x^n / [n]_t! for
    t = Q (tsign=+1) or t = Q^-1 (tsign=-1), of a nilpotent matrix.

    [n]_{Q^-1} = [n]_Q, so only the prefactor depends on the sign.
    """
    if tsign not in (1, -1):
        raise ValueError("tsign must be +1 or -1")
    n_max = bound if bound is not None else x.nrows
    result = Matrix.identity(x.nrows, one, _zero_like(one))
    power = result
    for n in range(1, n_max + 1):
        power = power * x
        if power.is_zero():
            return result
        coeff = FracScalar(Q_pow(-tsign * n * (n - 1)), qfact(n))
        result = result + power * coeff
    if bound is None and not (power * x).is_zero():
        raise ArithmeticError("q-exponential of a non-nilpotent matrix")
    return result


def _zero_like(one):
    return one - one


# ---------------------------------------------------------------------------
# the exponentiated coordinate matrices


def _spin_indices(j: Fraction):
    j = Fraction(j)
    if j < 0 or (2 * j).denominator != 1:
        raise ValueError(f"spin j must be a non-negative half-integer, got {j}")
    return [j - i for i in range(int(2 * j) + 1)]


def _closed_prefactor(j, m, k, norm):
    if norm == "symmetric":
        idx = (_fact_indices(j + m) + _fact_indices(j - m)
               + _fact_indices(j + k) + _fact_indices(j - k))
        return RadScalar.sqrt_qints(idx)
    return qfact(int(j + m)) * qfact(int(j - m))


def t_matrix_closed(j, z, norm: str = "symmetric") -> Matrix:
    """Spin-j matrix of coordinate algebra elements, single-sum formula.

    Entry (m, k), with rows and columns indexed by weights j, j-1, ..., -j:

        D^(z-j) * Q^(-(m-k)(2j-m+k)/2) * lambda^(-(m-k)(2j-2z-m-k)/2) * P_mk
        * sum_s Q^(-s(2j-m+k-s)) lambda^(-s(m-k+s))
          * a^(j+k-s) b^(m-k+s) c^s d^(j-m-s)
          / ([j+k-s]! [m-k+s]! [s]! [j-m-s]!)

    with P_mk the normalization prefactor.
    """
    j, z = Fraction(j), Fraction(z)
    if (2 * (z - j)).denominator != 1:
        raise ValueError("charge z must differ from j by a half-integer")
    if norm not in ("symmetric", "rational"):
        raise ValueError(f"unknown normalization {norm!r}")
    pres = apq_presentation()
    mvals = _spin_indices(j)

    def entry(r, c):
        m, k = mvals[r], mvals[c]
        u0 = -(m - k) * (2 * j - m + k)           # half-count of Q
        v0 = -(m - k) * (2 * j - 2 * z - m - k)   # half-count of lambda
        head = HalfLaurent.monomial(1, int(u0), int(v0))
        pref = _closed_prefactor(j, m, k, norm)
        terms = []
        s_lo = max(0, int(k - m))
        s_hi = min(int(j + k), int(j - m))
        for s in range(s_lo, s_hi + 1):
            us = -2 * s * (2 * j - m + k - s)
            vs = -2 * s * (m - k + s)
            mono = HalfLaurent.monomial(1, int(us), int(vs)) * head
            den = (qfact(int(j + k - s)) * qfact(int(m - k + s))
                   * qfact(s) * qfact(int(j - m - s)))
            coeff = pref * FracScalar(mono, den)
            word = []
            if z != j:
                word.append(("D", z - j))
            for g, e in (("a", j + k - s), ("b", m - k + s),
                         ("c", s), ("d", j - m - s)):
                if e:
                    word.append((g, e))
            terms.append((coeff, tuple(word)))
        return NCPoly(pres, terms)

    return Matrix.build(len(mvals), len(mvals), entry)


def t_matrix_factorized(j, z, norm: str = "symmetric") -> Matrix:
    """Spin-j matrix built as qexp(gamma Jhat-) * core * qexp(beta Jhat+).

    The construction happens at charge z' = j, where the diagonal core is
    diag(a^(j+m) w^(j-m)); the general charge is restored by the group-like
    scaling factor D^(z-j) lambda^((z-j)(m-k)) on entry (m, k).
    """
    j, z = Fraction(j), Fraction(z)
    if norm not in ("symmetric", "rational"):
        raise ValueError(f"unknown normalization {norm!r}")
    pres = apq_presentation()
    rep = gamma_rep(j, j, "symmetric")
    jp_hat, jm_hat = hatted(rep)
    coords = exponential_coordinates()
    beta, gamma, w = coords["beta"], coords["gamma"], coords["w"]
    one = NCPoly.one(pres)

    left = qexp(-1, jm_hat.map(lambda s: gamma * s), one)
    mvals = rep.mvals
    a = agen("a")
    mid = Matrix.build(
        rep.dim, rep.dim,
        lambda r, c: (a ** int(j + mvals[r])) * (w ** int(j - mvals[r]))
        if r == c else NCPoly.zero(pres))
    right = qexp(1, jp_hat.map(lambda s: beta * s), one)
    t = left * mid * right

    for r in range(rep.dim):
        for c in range(rep.dim):
            for word in t[r, c].terms:
                for g, e in word:
                    if g == "D" or (g == "a" and e < 0):
                        raise RewriteError(
                            "factorized matrix entry kept a localized factor")

    def rescale(r, c, x):
        factors = []
        if z != j:
            factors.append(NCPoly.gen(pres, "D", z - j))
        shift = 2 * (z - j) * (mvals[r] - mvals[c])
        entry = x * lam_pow(int(shift))
        for f in factors:
            entry = f * entry
        return entry

    t = Matrix.build(rep.dim, rep.dim, lambda r, c: rescale(r, c, t[r, c]))
    if norm == "symmetric":
        return t

    # change of basis to the rational normalization: entry (m, k) picks up
    # sqrt([j+m]![j-m]! / ([j+k]![j-k]!))
    def conv(r, c):
        m, k = mvals[r], mvals[c]
        idx = (_fact_indices(j + m) + _fact_indices(j - m)
               + _fact_indices(j + k) + _fact_indices(j - k))
        den = qfact(int(j + k)) * qfact(int(j - k))
        factor = RadScalar.sqrt_qints(idx, FracScalar(HalfLaurent.one(), den))
        return t[r, c].map_coeffs(lambda cf: factor * cf)

    return Matrix.build(rep.dim, rep.dim, conv)


def t_counit_identities(j, z, norm="rational") -> list[Identity]:
    """Entrywise counit of the spin-j matrix is the identity matrix."""
    t = t_matrix_closed(j, z, norm)
    pres = apq_presentation()
    lhs = t.map(lambda x: NCPoly.scalar(pres, counit(x)))
    rhs = Matrix.identity(t.nrows, NCPoly.one(pres), NCPoly.zero(pres))
    return [Identity(f"counit(T^({j};{z}))=id", lhs, rhs)]


def comodule_identities(j, z, norm="rational") -> list[Identity]:
    """Delta(T_ik) = sum_l T_il (x) T_lk, entry by entry."""
    t = t_matrix_closed(j, z, norm)
    pres = apq_presentation()
    t2 = tensor_square(pres)
    dim = t.nrows
    idents = []
    for i in range(dim):
        for k in range(dim):
            lhs = coproduct(t[i, k])
            rhs = NCPoly.zero(t2)
            for l in range(dim):
                rhs = rhs + embed_leg(t[i, l], t2, 1) * embed_leg(t[l, k], t2, 2)
            idents.append(Identity(f"Delta(T^({j};{z})[{i},{k}])", lhs, rhs))
    return idents


# ---------------------------------------------------------------------------
# the restricted intertwiner


def r_matrix_rep(j1, z1, j2, z2, norm: str = "rational") -> Matrix:
    """The universal intertwiner restricted to a pair of spin reps.

    R = diag(Q^(-2 m1 m2) lambda^(2(z1 m2 - m1 z2)))
        * sum_n (1-Q^2)^n / [n]! * Q^(-n(n-1)/2) * (A (x) B)^n

    with A = Q^(-m) lambda^(z1) J+ on the first leg (row weight m) and
    B = Q^(m) lambda^(z2) J- on the second.  The series terminates at
    n = 2 min(j1, j2).
    """
    rep1 = gamma_rep(j1, z1, norm)
    rep2 = gamma_rep(j2, z2, norm)
    amat = rep1.Jplus.scale_rows_cols(
        [HalfLaurent.monomial(1, -int(2 * m), int(2 * rep1.z))
         for m in rep1.mvals],
        [HalfLaurent.one()] * rep1.dim)
    bmat = rep2.Jminus.scale_rows_cols(
        [HalfLaurent.monomial(1, int(2 * m), int(2 * rep2.z))
         for m in rep2.mvals],
        [HalfLaurent.one()] * rep2.dim)
    ab = amat.kron(bmat)
    dim = rep1.dim * rep2.dim
    one, zero = rep1.one_entry(), rep1.zero_entry()
    total = Matrix.identity(dim, one, zero)
    power = total
    n_max = int(2 * min(rep1.j, rep2.j))
    for n in range(1, n_max + 1):
        power = power * ab
        coeff = FracScalar(
            (HalfLaurent.one() - Q_pow(4)) ** n * Q_pow(-n * (n - 1)),
            qfact(n))
        total = total + power * coeff
    pref = []
    for m1 in rep1.mvals:
        for m2 in rep2.mvals:
            u = -4 * m1 * m2
            v = 4 * (rep1.z * m2 - m1 * rep2.z)
            if Fraction(u).denominator != 1 or Fraction(v).denominator != 1:
                raise ValueError("weight product not a half-integer power")
            pref.append(HalfLaurent.monomial(1, int(u), int(v)))
    return Matrix.build(dim, dim, lambda r, c: pref[r] * total[r, c])


def quasitriangular_identities(j1, z1, j2, z2,
                               norm: str = "rational") -> list[Identity]:
    """R intertwines the coproduct with the opposite coproduct on the
    generators: R Delta(x) = Delta'(x) R."""
    rep1 = gamma_rep(j1, z1, norm)
    rep2 = gamma_rep(j2, z2, norm)
    rmat = r_matrix_rep(j1, z1, j2, z2, norm)

    def wdiag(rep, se, sz):
        # diag(Q^(se m) lambda^(sz z))
        return rep.diag(lambda m: HalfLaurent.monomial(
            1, se * int(2 * m), sz * int(2 * rep.z)))

    idents = []
    for name, g1, g2, szv in (("J+", rep1.Jplus, rep2.Jplus, 1),
                              ("J-", rep1.Jminus, rep2.Jminus, -1)):
        delta = (g1.kron(wdiag(rep2, -1, szv))
                 + wdiag(rep1, 1, -szv).kron(g2))
        delta_op = (wdiag(rep1, -1, szv).kron(g2)
                    + g1.kron(wdiag(rep2, 1, -szv)))
        idents.append(Identity(
            f"R.Delta({name})=Delta'({name}).R @ ({j1},{z1})x({j2},{z2})",
            rmat * delta, delta_op * rmat))
    dj0 = rep1.J0.kron(rep2.identity()) + rep1.identity().kron(rep2.J0)
    idents.append(Identity(
        f"R.Delta(J0)=Delta(J0).R @ ({j1},{z1})x({j2},{z2})",
        rmat * dj0, dj0 * rmat))
    return idents


# ---------------------------------------------------------------------------
# dual-pairing matrices


def _jhat_plus_u() -> NCPoly:
    # Q^(-1/2) e k^-1
    return NCPoly.scalar(u_presentation(), Q_pow(-1)) * u_parse("e*k^-1")


def _jhat_minus_u() -> NCPoly:
    # Q^(1/2) k f
    return NCPoly.scalar(u_presentation(), Q_pow(1)) * u_parse("k*f")


def l_matrix(sign: str, j, norm: str = "symmetric") -> Matrix:
    """Triangular matrix of dual algebra elements for the given sign.

    Obtained by pushing the factorized spin-j construction through the
    evaluation map: one q-exponential leg collapses (its coordinate maps
    to zero), the diagonal core maps to powers of k.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    j = Fraction(j)
    rep = gamma_rep(j, j, norm)
    pres = u_presentation()
    coords = exponential_coordinates()
    m_beta = u_rep_apply(rep, pi_apply(sign, coords["beta"]))
    m_gamma = u_rep_apply(rep, pi_apply(sign, coords["gamma"]))
    one = NCPoly.one(pres)
    jp, jm = _jhat_plus_u(), _jhat_minus_u()
    left = qexp(-1, m_gamma.map(lambda s: s * jm), one)
    ksign = -2 if sign == "+" else 2
    mid = Matrix.build(
        rep.dim, rep.dim,
        lambda r, c: NCPoly.gen(pres, "k", ksign * rep.mvals[r])
        if r == c else NCPoly.zero(pres))
    right = qexp(1, m_beta.map(lambda s: s * jp), one)
    return left * mid * right


def rll_identities(j, norm: str = "rational") -> list[Identity]:
    """R L2 L1 = L1 L2 R for sign pairs (+,+), (-,-) and (+,-)."""
    pres = u_presentation()
    lp = l_matrix("+", j, norm)
    lm = l_matrix("-", j, norm)
    # charge 0 makes the restricted intertwiner independent of lambda,
    # matching the lambda = 1 algebra the L entries live in
    rmat = r_matrix_rep(j, 0, j, 0, norm)
    dim = lp.nrows
    ident = Matrix.identity(dim, NCPoly.one(pres), NCPoly.zero(pres))

    def legs(l):
        return l.kron(ident), ident.kron(l)

    idents = []
    for lab, l2mat, l1mat in (("(+,+)", lp, lp), ("(-,-)", lm, lm),
                              ("(+,-)", lp, lm)):
        l1_2, _ = legs(l1mat)
        _, l2_1 = legs(l2mat)
        idents.append(Identity(
            f"R.L2.L1=L1.L2.R {lab} j={j}",
            rmat * (l2_1 * l1_2), (l1_2 * l2_1) * rmat))
    return idents


def delta_l_identities(sign: str, j, norm: str = "rational") -> list[Identity]:
    """Delta(L_ik) = sum_l L_il (x) L_lk."""
    lmat = l_matrix(sign, j, norm)
    pres = u_presentation()
    t2 = tensor_square(pres)
    idents = []
    for i in range(lmat.nrows):
        for k in range(lmat.ncols):
            lhs = u_coproduct(lmat[i, k])
            rhs = NCPoly.zero(t2)
            for l in range(lmat.nrows):
                rhs = rhs + (embed_leg(lmat[i, l], t2, 1)
                             * embed_leg(lmat[l, k], t2, 2))
            idents.append(Identity(f"Delta(L^{sign}({j})[{i},{k}])", lhs, rhs))
    return idents


def pi_t_vs_r_identities(j, norm: str = "rational") -> list[Identity]:
    """Representing the defining 2x2 matrix through the evaluation maps
    reproduces blocks of the restricted intertwiner.

    Plus side: Gamma(pi+(t_ik))[l,m] = R[(i,l),(k,m)] with R restricted to
    the pair (1/2, j).  Minus side: Gamma(pi-(t_ik))[l,m] equals entry
    ((l,i),(m,k)) of the INVERSE of R restricted to the swapped pair
    (j, 1/2) - the transposed subscript placement of the usual statement
    only makes sense with the tensor legs in that order.
    """
    j = Fraction(j)
    rep = gamma_rep(j, j, norm)
    half = Fraction(1, 2)
    rmat = r_matrix_rep(half, 0, j, 0, norm)
    rinv_swapped = r_matrix_rep(j, 0, half, 0, norm).inverse()
    tdef = [[a_parse("a"), a_parse("b")], [a_parse("c"), a_parse("d")]]
    dim = rep.dim
    idents = []
    for i in range(2):
        for k in range(2):
            got = u_rep_apply(rep, pi_apply("+", tdef[i][k]))
            want = Matrix.build(
                dim, dim, lambda l, m: rmat[i * dim + l, k * dim + m])
            idents.append(Identity(
                f"Gamma(pi+(t[{i},{k}])) vs R-block j={j}", got, want))
    for i in range(2):
        for k in range(2):
            got = u_rep_apply(rep, pi_apply("-", tdef[i][k]))
            want = Matrix.build(
                dim, dim, lambda l, m: rinv_swapped[l * 2 + i, m * 2 + k])
            idents.append(Identity(
                f"Gamma(pi-(t[{i},{k}])) vs R^-1-block j={j}", got, want,
                note="inverse taken on the swapped pair (j, 1/2)"))
    return idents


def tprime_r_identities(j1, j2, norm: str = "rational") -> list[Identity]:
    """Representing both legs of the mixed construction against the
    restricted intertwiner.

    With L = l_matrix(sign, j2) and the first leg represented at spin j1:
    the plus sign reproduces R on (j1, j2) exactly; the minus sign does
    not reproduce R but the leg-flipped inverse of R on (j2, j1), and the
    identity is recorded with that corrected right-hand side.
    """
    j1, j2 = Fraction(j1), Fraction(j2)
    rep1 = gamma_rep(j1, j1, norm)
    d1 = rep1.dim
    idents = []
    for sign in ("+", "-"):
        lmat = l_matrix(sign, j2, norm)
        d2 = lmat.nrows
        blocks = [[u_rep_apply(rep1, lmat[l, m]) for m in range(d2)]
                  for l in range(d2)]
        lhs = Matrix.build(
            d1 * d2, d1 * d2,
            lambda rr, cc: blocks[rr % d2][cc % d2][rr // d2, cc // d2])
        if sign == "+":
            rhs = r_matrix_rep(j1, 0, j2, 0, norm)
            note = ""
        else:
            rhs = r_matrix_rep(j2, 0, j1, 0, norm).inverse() \
                .flip_legs(int(2 * j1) + 1, int(2 * j2) + 1)
            note = ("minus sign equals the leg-flipped inverse intertwiner, "
                    "not the intertwiner itself")
        idents.append(Identity(
            f"(Gamma x Gamma(pi{sign}))(T') vs R ({j1},{j2})",
            lhs, rhs, note=note))
    return idents
