"""Exact q-bracket calculus.

The q-bracket of x is (q^x - 1)/(q - 1).  To keep every quantity rational the
evaluation point is built from a single base rho: q = rho**d and t = rho**c,
so that t is exactly the x-th power of q with x = c/d.  A separate classical
mode carries (q = 1, x) and replaces every bracket by its q -> 1 limit, which
is plain x; no numerical limits are taken anywhere.

Any rational q > 0 with q != 1 is accepted: every identity checked downstream
is a rational identity in (q, t), so testing is not restricted to 0 < q < 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import Laurent


@dataclass(frozen=True)
class QPoint:
    """A coherent evaluation point where q, t and x are all rational.

    q-mode: constructed from (rho, c, d) with rho > 0, rho != 1, d >= 1;
    then q = rho**d, t = rho**c and x = c/d, with t**d == q**c exactly.
    Classical mode: built by :meth:`classical`; q = 1 and brackets
    degenerate to x itself.
    """

    rho: Fraction | None
    c: int
    d: int

    def __post_init__(self):
        if self.rho is None:
            if self.d < 1:
                raise ValueError("classical point needs a positive denominator")
            return
        rho = Fraction(self.rho)
        object.__setattr__(self, "rho", rho)
        if rho <= 0 or rho == 1:
            raise ValueError("rho must be a positive rational different from 1")
        if self.d < 1:
            raise ValueError("d must be a positive integer")

    @classmethod
    def classical(cls, x: Fraction) -> "QPoint":
        x = Fraction(x)
        return cls(rho=None, c=x.numerator, d=x.denominator)

    @property
    def is_classical(self) -> bool:
        return self.rho is None

    @property
    def q(self) -> Fraction:
        return Fraction(1) if self.rho is None else self.rho**self.d

    @property
    def t(self) -> Fraction:
        if self.rho is None:
            raise ValueError("classical point has no t value")
        return self.rho**self.c

    @property
    def x(self) -> Fraction:
        return Fraction(self.c, self.d)


def bracket(p: QPoint) -> Fraction:
    """The q-bracket of x at the point: (t - 1)/(q - 1), or x classically."""
    if p.is_classical:
        return p.x
    return (p.t - 1) / (p.q - 1)


def bracket_conjugates(p: QPoint) -> tuple[Fraction, Fraction]:
    """The pair (bracket of x under the inverse base, bracket of 1 - x).

    The first entry is q (1 - t) / (t (1 - q)); the second is one minus the
    first, which agrees exactly with the defining quotient for 1 - x.
    """
    if p.is_classical:
        return p.x, 1 - p.x
    q, t = p.q, p.t
    conj = q * (1 - t) / (t * (1 - q))
    return conj, 1 - conj


def one_minus_bracket_power(p: QPoint, m: int) -> tuple[Fraction, Laurent]:
    """The m-th power of the bracket of 1 - x, as a scalar and in Laurent form.

    The Laurent form is t**(-m) * sum over l of binom(m, l) (-1)^l X^l where
    X is the bracket of x written in t; substituting the point's t value must
    reproduce the scalar exactly.  Rejected in classical mode, where the
    Laurent expansion is undefined.
    """
    if m < 0:
        raise ValueError("power must be nonnegative")
    if p.is_classical:
        raise ValueError("Laurent expansion undefined at q = 1")
    scalar = bracket_conjugates(p)[1] ** m
    x_in_t = bracket_in_t(p.q)
    expansion = Laurent({-m: 1}) * (Laurent({0: 1}) - x_in_t) ** m
    return scalar, expansion


def bracket_in_t(q: Fraction) -> Laurent:
    """The bracket of x as a Laurent polynomial in t: (t - 1)/(q - 1)."""
    q = _check_q(q)
    return Laurent({1: Fraction(1) / (q - 1), 0: Fraction(-1) / (q - 1)})


def conjugate_bracket_in_t(q: Fraction) -> Laurent:
    """The inverse-base bracket of x in t: (q/t - q)/(1 - q)."""
    q = _check_q(q)
    return Laurent({-1: q / (1 - q), 0: -q / (1 - q)})


def one_minus_conjugate_in_t(q: Fraction) -> Laurent:
    """The bracket of 1 - x in t: (1 - q/t)/(1 - q)."""
    q = _check_q(q)
    return Laurent({0: Fraction(1) / (1 - q), -1: -q / (1 - q)})


def _check_q(q: Fraction) -> Fraction:
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be a positive rational different from 1")
    return q
