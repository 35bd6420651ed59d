"""The dual quantized enveloping algebra and its finite-dimensional
representations.

Generators e, f and a group-like scaling generator k with half-integer
powers, over the single-parameter scalar ring (lambda = 1, so p = q = Q).
Normal order is f < k < e.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import parser
from .matrices import Matrix
from .reporting import Identity
from .rewrite import (ORDINARY, SCALING, NCPoly, Presentation, embed_leg,
                      hom_apply, tensor_square)
from .scalars import (FracScalar, HalfLaurent, Q_pow, RadScalar, ScalarError,
                      lift_scalar, qint, scalar_lambda_one, scalar_level)


@lru_cache(maxsize=None)
def u_presentation() -> Presentation:
    one = FracScalar.one()
    # [e,f] = (k^2 - k^-2) / (Q - Q^-1)
    denom = Q_pow(2) - Q_pow(-2)
    pos = FracScalar(HalfLaurent.one(), denom)
    rules = {
        ("e", "f"): (one, ((pos, (("k", 2),)), (-pos, (("k", -2),)))),
    }
    scaling = {
        ("k", "e"): Q_pow(1),   # k^(1/2) e = Q^(1/2) e k^(1/2)
        ("k", "f"): Q_pow(-1),
    }
    return Presentation(
        name="uq",
        generators=(("f", ORDINARY), ("k", SCALING), ("e", ORDINARY)),
        rules=rules,
        scaling=scaling,
        lambda_one=True,
    )


def u_parse(text: str) -> NCPoly:
    return parser.parse(text, u_presentation()).normalized()


def ugen(name: str, exp=1) -> NCPoly:
    return NCPoly.gen(u_presentation(), name, exp)


def u_relation_identities() -> list[Identity]:
    h = Fraction(1, 2)
    idents = [
        Identity("ke=q.ek (half powers)",
                 ugen("k", h) * ugen("e"),
                 NCPoly.scalar(u_presentation(), Q_pow(1))
                 * ugen("e") * ugen("k", h)),
        Identity("kf=(1/q).fk (half powers)",
                 ugen("k", h) * ugen("f"),
                 NCPoly.scalar(u_presentation(), Q_pow(-1))
                 * ugen("f") * ugen("k", h)),
        Identity("[e,f]=(k^2-k^-2)/(q-q^-1)",
                 u_parse("e*f - f*e"),
                 u_parse("k^2 - k^-2").map_coeffs(
                     lambda c: FracScalar(c, Q_pow(2) - Q_pow(-2)))),
        Identity("k.k^-1=1", u_parse("k*k^-1"), u_parse("1")),
    ]
    return idents


def u_coproduct(x: NCPoly) -> NCPoly:
    """Coproduct with group-like k: e, f -> g (x) k^-1 + k (x) g."""
    pres = u_presentation()
    if x.pres is not pres:
        raise ValueError("u_coproduct expects an element of the uq algebra")
    t2 = tensor_square(pres)

    def leg(name, i, exp=1):
        return NCPoly.gen(t2, f"{name}@{i}", exp)

    images = {
        "e": leg("e", 1) * leg("k", 2, -1) + leg("k", 1) * leg("e", 2),
        "f": leg("f", 1) * leg("k", 2, -1) + leg("k", 1) * leg("f", 2),
    }
    return hom_apply(x, t2, images, scaling_images={"k": ("k@1", "k@2")})


def pi_images(sign: str) -> dict:
    """The two evaluation maps from the coordinate algebra onto the dual
    algebra (b or c is killed depending on the sign)."""
    pres = u_presentation()
    zero = NCPoly.zero(pres)
    k = NCPoly.gen(pres, "k", 1)
    kinv = NCPoly.gen(pres, "k", -1)
    # q^(-1/2)(q - q^-1) and q^(1/2)(q^-1 - q)
    cm = (Q_pow(-1) * (Q_pow(2) - Q_pow(-2)))
    bp = (Q_pow(1) * (Q_pow(-2) - Q_pow(2)))
    if sign == "-":
        return {"a": k, "b": zero,
                "c": NCPoly.scalar(pres, cm) * NCPoly.gen(pres, "e"),
                "d": kinv}
    if sign == "+":
        return {"a": kinv, "b": NCPoly.scalar(pres, bp) * NCPoly.gen(pres, "f"),
                "c": zero, "d": k}
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def pi_apply(sign: str, x: NCPoly) -> NCPoly:
    """Apply the evaluation map to an element of the coordinate algebra.

    The source coefficients live at generic lambda; the target algebra sits
    at lambda = 1, so coefficients are specialized on the way through.
    """
    out = hom_apply(x, u_presentation(), pi_images(sign),
                    scaling_images={"D": ()})
    return out.map_coeffs(scalar_lambda_one).normalized()


# ---------------------------------------------------------------------------
# spin-j representations


class Rep:
    """A finite-dimensional weight representation.

    Rows and columns are indexed by the weights m = j, j-1, ..., -j.
    Jplus/Jminus are the ladder matrices, J0 the weight and Z the central
    charge (scalar z times the identity).  ``norm`` records whether ladder
    entries are square roots of q-integers ("symmetric") or plain
    q-integers ("rational").
    """

    def __init__(self, j, z, norm, Jplus, Jminus):
        self.j = Fraction(j)
        self.z = Fraction(z)
        self.norm = norm
        self.Jplus = Jplus
        self.Jminus = Jminus
        self.mvals = [self.j - i for i in range(int(2 * self.j) + 1)]
        self.J0 = Matrix.build(
            self.dim, self.dim,
            lambda r, c: FracScalar(self.mvals[r]) if r == c
            else FracScalar.zero())
        self.Z = Matrix.build(
            self.dim, self.dim,
            lambda r, c: FracScalar(self.z) if r == c else FracScalar.zero())

    @property
    def dim(self) -> int:
        return len(self.mvals)

    def zero_entry(self):
        return RadScalar.zero() if self.norm == "symmetric" \
            else FracScalar.zero()

    def one_entry(self):
        return RadScalar.one() if self.norm == "symmetric" \
            else FracScalar.one()

    def identity(self) -> Matrix:
        return Matrix.identity(self.dim, self.one_entry(), self.zero_entry())

    def diag(self, fn) -> Matrix:
        """Diagonal matrix with entry fn(m) at weight m."""
        return Matrix.build(
            self.dim, self.dim,
            lambda r, c: fn(self.mvals[r]) if r == c else self.zero_entry())

    def to_json(self):
        from .scalars import scalar_to_json
        enc = lambda M: M.to_json(scalar_to_json)
        return {"j": f"{self.j.numerator}/{self.j.denominator}",
                "z": f"{self.z.numerator}/{self.z.denominator}",
                "norm": self.norm,
                "Jplus": enc(self.Jplus), "Jminus": enc(self.Jminus),
                "J0": enc(self.J0), "Z": enc(self.Z)}


def gamma_rep(j, z, norm: str = "symmetric") -> Rep:
    """The spin-j representation with central charge z.

    symmetric: ladder entries sqrt([j+-m][j+1-+m]), self-adjoint-looking.
    rational: (J+)_{m,m-1} = [j-m+1] = [j-k] and (J-)_{m,m+1} = [j+k],
    related to the symmetric form by a diagonal change of basis.
    """
    j, z = Fraction(j), Fraction(z)
    if j < 0 or (2 * j).denominator != 1:
        raise ValueError(f"spin j must be a non-negative half-integer, got {j}")
    if (2 * (z - j)).denominator != 1:
        raise ValueError(f"charge z must differ from j by a half-integer")
    if norm not in ("symmetric", "rational"):
        raise ValueError(f"unknown normalization {norm!r}")
    dim = int(2 * j) + 1
    mvals = [j - i for i in range(dim)]

    if norm == "symmetric":
        zero = RadScalar.zero()

        def plus(r, c):
            m, k = mvals[r], mvals[c]
            if m != k + 1:
                return zero
            return RadScalar.sqrt_qints([int(j + m), int(j + 1 - m)])

        def minus(r, c):
            m, k = mvals[r], mvals[c]
            if m != k - 1:
                return zero
            return RadScalar.sqrt_qints([int(j - m), int(j + 1 + m)])
    else:
        zero = FracScalar.zero()

        def plus(r, c):
            m, k = mvals[r], mvals[c]
            if m != k + 1:
                return zero
            return FracScalar(qint(int(j - k)))

        def minus(r, c):
            m, k = mvals[r], mvals[c]
            if m != k - 1:
                return zero
            return FracScalar(qint(int(j + k)))

    return Rep(j, z, norm,
               Matrix.build(dim, dim, plus), Matrix.build(dim, dim, minus))


def hatted(rep: Rep):
    """Twisted ladder matrices absorbing the weight and charge factors.

    Jplus_hat picks up Q^-(m'+1/2) lambda^(z-1/2) at source weight m'
    (column index); Jminus_hat picks up Q^(m+1/2) lambda^(z-1/2) at target
    weight m (row index).
    """
    z2 = 2 * rep.z  # lambda^(z-1/2) has half-count 2z-1, an integer
    col = [HalfLaurent.monomial(1, -int(2 * m + 1), int(z2 - 1))
           for m in rep.mvals]
    row = [HalfLaurent.monomial(1, int(2 * m + 1), int(z2 - 1))
           for m in rep.mvals]
    one = HalfLaurent.one()
    jp = rep.Jplus.scale_rows_cols([one] * rep.dim, col)
    jm = rep.Jminus.scale_rows_cols(row, [one] * rep.dim)
    return jp, jm


def u_rep_apply(rep: Rep, x: NCPoly) -> Matrix:
    """Represent an element of the dual algebra as a matrix: f acts as
    Jminus, e as Jplus, and k^s as diag(Q^(s m))."""
    pres = u_presentation()
    if x.pres is not pres:
        raise ValueError("u_rep_apply expects an element of the uq algebra")
    zero = rep.zero_entry()
    total = Matrix.build(rep.dim, rep.dim, lambda r, c: zero)
    for word, coeff in x.terms.items():
        m = rep.identity() * coeff
        for g, e in word:
            if g == "k":
                def kdiag(mw, s=Fraction(e)):
                    half = 2 * s * mw
                    if half.denominator != 1:
                        raise ScalarError(
                            f"k^{s} eigenvalue Q^({s}*{mw}) is not a "
                            f"half-integer power of Q")
                    return HalfLaurent.monomial(1, int(half), 0)
                m = m * rep.diag(kdiag)
            elif g == "e":
                if e < 0:
                    raise ScalarError("e is not invertible in a representation")
                for _ in range(int(e)):
                    m = m * rep.Jplus
            elif g == "f":
                if e < 0:
                    raise ScalarError("f is not invertible in a representation")
                for _ in range(int(e)):
                    m = m * rep.Jminus
            else:
                raise ScalarError(f"unknown generator {g} in representation")
        total = total + m
    return total


def rep_relation_identities(rep: Rep) -> list[Identity]:
    """The defining relations evaluated in a representation."""
    E, F = rep.Jplus, rep.Jminus
    K = rep.diag(lambda m: HalfLaurent.monomial(1, int(2 * m), 0))
    Kinv = rep.diag(lambda m: HalfLaurent.monomial(1, -int(2 * m), 0))
    # k e k^-1 = Q e ; k f k^-1 = Q^-1 f
    lhs_e = K * E * Kinv
    rhs_e = E * Q_pow(2)
    lhs_f = K * F * Kinv
    rhs_f = F * Q_pow(-2)
    comm = E * F - F * E
    denom = Q_pow(2) - Q_pow(-2)
    rhs_c = rep.diag(lambda m: FracScalar(
        HalfLaurent.monomial(1, int(4 * m), 0)
        - HalfLaurent.monomial(1, -int(4 * m), 0), denom))
    return [
        Identity(f"rep(j={rep.j}).kek^-1=q.e", lhs_e, rhs_e),
        Identity(f"rep(j={rep.j}).kfk^-1=q^-1.f", lhs_f, rhs_f),
        Identity(f"rep(j={rep.j}).[e,f]", comm, rhs_c),
        Identity(f"rep(j={rep.j}).casimir-ladders",
                 E * F, rep.diag(lambda m: lift_scalar(
                     FracScalar(qint(int(rep.j + m)) * qint(int(rep.j - m + 1))),
                     scalar_level(rep.one_entry())))),
    ]


def pi_homomorphism_identities(sign: str) -> list[Identity]:
    """The evaluation map preserves the six exchange relations and sends
    the quantum determinant to 1."""
    from .algebra_a import quantum_determinant, relation_identities
    idents = []
    for ident in relation_identities():
        idents.append(Identity(
            f"pi{sign}.{ident.label}",
            pi_apply(sign, ident.lhs), pi_apply(sign, ident.rhs)))
    idents.append(Identity(
        f"pi{sign}.qdet=1",
        pi_apply(sign, quantum_determinant()),
        NCPoly.one(u_presentation())))
    return idents


def normalization_similarity_identities(j) -> list[Identity]:
    """The two ladder normalizations are conjugate by the diagonal matrix
    with entries sqrt([j+m]! [j-m]!)."""
    j = Fraction(j)
    sym = gamma_rep(j, j, "symmetric")
    rat = gamma_rep(j, j, "rational")
    svals = [RadScalar.sqrt_qints(
        list(range(2, int(j + m) + 1)) + list(range(2, int(j - m) + 1)))
        for m in sym.mvals]
    S = Matrix.build(sym.dim, sym.dim,
                     lambda r, c: svals[r] if r == c else RadScalar.zero())
    idents = []
    for name, msym, mrat in (("J+", sym.Jplus, rat.Jplus),
                             ("J-", sym.Jminus, rat.Jminus)):
        idents.append(Identity(
            f"norm-similarity(j={j}).{name}", msym * S, S * mrat))
    return idents
