"""Hand-transcribed reference matrices used as oracles by the tests."""

from fractions import Fraction

from qexpmap.algebra_a import a_parse, agen, apq_presentation
from qexpmap.algebra_u import u_parse, u_presentation
from qexpmap.matrices import Matrix
from qexpmap.rewrite import NCPoly
from qexpmap.scalars import FracScalar, Q_pow, RadScalar, lam_pow, p_pow

HALF = Fraction(1, 2)


def a_entry(coeff, text):
    pres = apq_presentation()
    return NCPoly.scalar(pres, coeff) * a_parse(text)


def u_entry(coeff, text):
    pres = u_presentation()
    base = u_parse(text) if text else NCPoly.one(pres)
    return NCPoly.scalar(pres, coeff) * base


def t_defining() -> Matrix:
    return Matrix([[agen("a"), agen("b")], [agen("c"), agen("d")]])


def t_spin1_charge_half() -> Matrix:
    """The 3x3 exponentiated T-matrix at (j; z) = (1; 1/2), entrywise."""
    root2 = RadScalar.sqrt_qints([2])
    qm = FracScalar(Q_pow(-1))
    return Matrix([
        [a_entry(1, "D^-1/2*a^2"),
         a_entry(root2 * qm, "D^-1/2*a*b"),
         a_entry(lam_pow(-2), "D^-1/2*b^2")],
        [a_entry(root2 * qm, "D^-1/2*a*c"),
         a_entry(1, "D^-1/2*a*d") + a_entry(p_pow(-1), "D^-1/2*b*c"),
         a_entry(root2 * qm * FracScalar(lam_pow(-2)), "D^-1/2*b*d")],
        [a_entry(lam_pow(2), "D^-1/2*c^2"),
         a_entry(root2 * qm * FracScalar(lam_pow(2)), "D^-1/2*c*d"),
         a_entry(1, "D^-1/2*d^2")],
    ])


def l_fundamental(sign: str) -> Matrix:
    zero = NCPoly.zero(u_presentation())
    if sign == "+":
        bp = Q_pow(1) * (Q_pow(-2) - Q_pow(2))    # q^{1/2}(q^{-1} - q)
        return Matrix([[u_entry(1, "k^-1"), zero],
                       [u_entry(bp, "e"), u_entry(1, "k")]])
    cm = Q_pow(-1) * (Q_pow(2) - Q_pow(-2))       # q^{-1/2}(q - q^{-1})
    return Matrix([[u_entry(1, "k"), u_entry(cm, "f")],
                   [zero, u_entry(1, "k^-1")]])


def l_spin1(sign: str) -> Matrix:
    root2 = RadScalar.sqrt_qints([2])
    zero = NCPoly.zero(u_presentation())
    one = NCPoly.one(u_presentation())
    if sign == "+":
        c = FracScalar(1 - Q_pow(4))              # 1 - q^2
        return Matrix([
            [u_entry(1, "k^-2"), zero, zero],
            [u_entry(root2 * c, "k^-1*e"), one, zero],
            [u_entry(Q_pow(-2) * (1 - Q_pow(4)) ** 2, "e^2"),
             u_entry(root2 * c * FracScalar(Q_pow(-2)), "k*e"),
             u_entry(1, "k^2")],
        ])
    c = FracScalar(1 - Q_pow(-4))                 # 1 - q^{-2}
    return Matrix([
        [u_entry(1, "k^2"),
         u_entry(root2 * c * FracScalar(Q_pow(2)), "k*f"),
         u_entry(Q_pow(2) * (1 - Q_pow(-4)) ** 2, "f^2")],
        [zero, one, u_entry(root2 * c, "k^-1*f")],
        [zero, zero, u_entry(1, "k^-2")],
    ])
