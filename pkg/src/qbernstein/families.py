"""Special-number and polynomial families, each defined through its generating
function and extracted with the series engine.

The generating functions are the single source of truth here.  Closed forms
(explicit binomial products, recurrences) appear only in the test suite as
independent cross-checks, with two deliberate exceptions noted on
:func:`bernstein_classical` and :func:`qbernstein`, whose closed forms are
themselves the coefficient formulas of their generating functions.

``prob_qbernstein`` is the ground truth the audit registry compares everything
against: the exponential coefficient of (v X)^r / r! times the MGF raised to
the bracket of 1 - x.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .distributions import Distribution
from .qcalc import QPoint, bracket, bracket_conjugates, bracket_in_t, one_minus_conjugate_in_t
from .rings import Laurent, Poly
from .series import Series, exp_series


@lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> Fraction:
    """Partition-counting numbers of the second kind, via their generating
    function: m! S(n, m) is the exponential coefficient of (e^v - 1)^m."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return Fraction(0)
    power = Series.one(n)
    base = exp_series(Fraction(1), n) - 1
    for _ in range(m):
        power = power * base
    return power.egf_coeff(n) / Fraction(math.factorial(m))


@lru_cache(maxsize=None)
def _mgf_minus_one_power(d: Distribution, m: int, order: int) -> Series:
    base = d.mgf_series(order) - 1
    out = Series.one(order)
    for _ in range(m):
        out = out * base
    return out


def prob_stirling2(d: Distribution, n: int, m: int) -> Fraction:
    """Law-dependent generalization of stirling2: the exponential coefficient
    of (M - 1)^m / m! where M is the MGF of ``d``."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return Fraction(0)
    return _mgf_minus_one_power(d, m, n).egf_coeff(n) / Fraction(math.factorial(m))


def bell_poly(n: int, x):
    """Exponential coefficient of exp(x (e^v - 1))."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    inner = (exp_series(Fraction(1), n) - 1) * x
    return inner.exp().egf_coeff(n)


def higher_bernoulli(n: int, order, x):
    """Exponential coefficient of (v/(e^v - 1))^order * e^(x v).

    ``order`` and ``x`` may be any exact scalars (the order enters through a
    series power, the argument through an exponential factor).
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    base = Series(Fraction(1, math.factorial(k + 1)) for k in range(n + 1))
    return (base.recip().pow(order) * exp_series(x, n)).egf_coeff(n)


def euler_poly(n: int, x):
    """Exponential coefficient of 2/(e^v + 1) * e^(x v)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    denom = exp_series(Fraction(1), n) + 1
    return (denom.recip() * 2 * exp_series(x, n)).egf_coeff(n)


def frobenius_euler(n: int, order, x, u: Fraction):
    """Exponential coefficient of ((1 - u)/(e^v - u))^order * e^(x v).

    Implemented by normalizing e^v - u to unit constant term before the
    power, so the series power precondition holds for every u != 1.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    u = Fraction(u)
    if u == 1:
        raise ValueError("u = 1 makes the generating function degenerate")
    scaled = (exp_series(Fraction(1), n) - u) * (Fraction(1) / (1 - u))
    return (scaled.recip().pow(order) * exp_series(x, n)).egf_coeff(n)


def prob_bernoulli_higher(d: Distribution, n: int, r: int, z):
    """Exponential coefficient of (v/(M - 1))^r * M^z for the law ``d``.

    The series v/(M - 1) has constant term 1/E[Y]; that scalar is factored
    out so the powered series has unit constant term, then reapplied.
    """
    if n < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    m_series = d.mgf_series(n + 1)
    core = Series.one(n)
    scale = Fraction(1)
    if r > 0:
        mean = m_series.coeffs[1]
        if mean == 0:
            raise ValueError("law has mean zero; v/(M - 1) is undefined")
        unit = (m_series - 1).divide_v(1) * (Fraction(1) / mean)
        core = unit.recip().pow(r)
        scale = mean ** (-r)
    mz = m_series.truncate(n).pow(z)
    return (core * mz * scale).egf_coeff(n)


def prob_bernoulli(d: Distribution, n: int, z):
    """Exponential coefficient of (v/(M - 1)) * M^z."""
    return prob_bernoulli_higher(d, n, 1, z)


def prob_euler(d: Distribution, n: int, z):
    """Exponential coefficient of 2/(M + 1) * M^z."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    m_series = d.mgf_series(n)
    return ((m_series + 1).recip() * 2 * m_series.pow(z)).egf_coeff(n)


def bernstein_classical(r: int, n: int, x: Fraction) -> Fraction:
    """Classical Bernstein basis value binom(n, r) x^r (1 - x)^(n - r).

    This closed form is exactly the exponential coefficient of
    (v x)^r / r! * e^((1 - x) v); the series route is asserted equal in tests.
    """
    _check_indices(r, n)
    x = Fraction(x)
    return math.comb(n, r) * x**r * (1 - x) ** (n - r)


def qbernstein(r: int, n: int, p: QPoint) -> Fraction:
    """q-deformed Bernstein basis value binom(n, r) X^r X1^(n - r), where X
    and X1 are the brackets of x and of 1 - x at the point.

    Again the closed form is the exponential coefficient of its generating
    function (v X)^r / r! * e^(X1 v); tests assert the series route agrees.
    In classical mode this is :func:`bernstein_classical`.
    """
    _check_indices(r, n)
    x_val = bracket(p)
    one_minus = bracket_conjugates(p)[1]
    return math.comb(n, r) * x_val**r * one_minus ** (n - r)


@lru_cache(maxsize=None)
def _mgf_power(d: Distribution, exponent: Fraction, order: int) -> Series:
    return d.mgf_series(order).pow(exponent)


def prob_qbernstein(d: Distribution, r: int, n: int, p: QPoint) -> Fraction:
    """Ground truth: the exponential coefficient at index n of
    (v X)^r / r! * M^X1, with X, X1 the brackets of x and 1 - x at ``p``."""
    _check_indices(r, n)
    x_val = bracket(p)
    one_minus = bracket_conjugates(p)[1]
    powered = _mgf_power(d, one_minus, n)
    front = Series.monomial(r, x_val**r * Fraction(1, math.factorial(r)), n)
    return (front * powered).egf_coeff(n)


@lru_cache(maxsize=None)
def _mgf_symbolic_power(d: Distribution, order: int) -> Series:
    """MGF raised to a formal exponent symbol; coefficients are Poly values."""
    return d.mgf_series(order).pow(Poly.x())


def prob_qbernstein_laurent(d: Distribution, r: int, n: int, q: Fraction) -> Laurent:
    """The same value as :func:`prob_qbernstein` but with the x-dependence
    kept as a Laurent polynomial in t.

    The MGF is raised to a formal exponent symbol, the relevant exponential
    coefficient is taken as a polynomial in that symbol, and the symbol is
    substituted by the bracket of 1 - x written in t.  Evaluating the result
    at any point with the same q reproduces the scalar value exactly.
    """
    _check_indices(r, n)
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be a positive rational different from 1")
    symbolic = _mgf_symbolic_power(d, n - r)
    coeff = symbolic.egf_coeff(n - r)
    target = one_minus_conjugate_in_t(q)
    substituted = coeff(target) if isinstance(coeff, Poly) else Laurent({0: coeff})
    if not isinstance(substituted, Laurent):
        substituted = Laurent({0: substituted})
    x_part = bracket_in_t(q) ** r
    return math.comb(n, r) * x_part * substituted


def _check_indices(r: int, n: int):
    if r < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if r > n:
        raise ValueError(f"lower index {r} exceeds upper index {n}")
