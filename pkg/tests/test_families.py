import math
import random
from fractions import Fraction as F

import pytest

from qbernstein.distributions import (
    Bernoulli,
    Binomial,
    Constant,
    Geometric,
    NegBinomial,
    Poisson,
    Uniform01,
)
from qbernstein.families import (
    bell_poly,
    bernstein_classical,
    euler_poly,
    frobenius_euler,
    higher_bernoulli,
    prob_bernoulli,
    prob_bernoulli_higher,
    prob_euler,
    prob_qbernstein,
    prob_qbernstein_laurent,
    prob_stirling2,
    qbernstein,
    stirling2,
)
from qbernstein.qcalc import QPoint, bracket, bracket_conjugates
from qbernstein.rings import Poly
from qbernstein.series import Series, exp_series

from oracles import set_partition_count

SIX_LAWS = [
    Poisson(F(2, 3)),
    Bernoulli(F(1, 2)),
    Binomial(3, F(1, 3)),
    Geometric(F(1, 2)),
    NegBinomial(2, F(2, 3)),
    Uniform01(),
]

POINT = QPoint(F(2, 3), 1, 2)


def _stirling_recurrence(n, m, memo={}):
    if (n, m) in memo:
        return memo[n, m]
    if n == 0:
        value = 1 if m == 0 else 0
    elif m == 0 or m > n:
        value = 0
    else:
        value = m * _stirling_recurrence(n - 1, m) + _stirling_recurrence(
            n - 1, m - 1
        )
    memo[n, m] = value
    return value


def test_stirling2_against_brute_force_partitions():
    for n in range(9):
        for m in range(n + 2):
            assert stirling2(n, m) == set_partition_count(n, m)


def test_stirling2_against_recurrence():
    for n in range(13):
        for m in range(13):
            assert stirling2(n, m) == _stirling_recurrence(n, m)


def test_stirling2_edge_values():
    assert stirling2(4, 2) == 7
    for n in range(1, 10):
        assert stirling2(n, n) == 1
        assert stirling2(n, 0) == 0


def test_prob_stirling2_reduces_at_unit_law():
    one = Constant(F(1))
    for n in range(13):
        for m in range(13):
            assert prob_stirling2(one, n, m) == stirling2(n, m)


def test_prob_stirling2_first_value_is_the_mean():
    for law in SIX_LAWS:
        assert prob_stirling2(law, 1, 1) == law.moment(1)


def test_prob_stirling2_is_lower_triangular():
    for law in SIX_LAWS:
        for m in range(1, 7):
            for n in range(m):
                assert prob_stirling2(law, n, m) == 0


def test_bell_poly_values():
    assert bell_poly(0, F(7)) == 1
    assert bell_poly(2, Poly.x()) == Poly([0, 1, 1])
    assert bell_poly(3, F(1)) == 5
    # agreement with the unit-law partition numbers
    for n in range(8):
        assert bell_poly(n, F(1)) == sum(stirling2(n, m) for m in range(n + 1))


def test_higher_bernoulli_values():
    assert higher_bernoulli(1, 1, F(0)) == F(-1, 2)
    assert higher_bernoulli(0, F(5, 2), F(9)) == 1
    for n in range(6):
        assert higher_bernoulli(n, 0, F(3)) == F(3) ** n
    # classical first-order values
    assert higher_bernoulli(2, 1, F(0)) == F(1, 6)
    assert higher_bernoulli(4, 1, F(0)) == F(-1, 30)


def test_euler_poly_values():
    assert euler_poly(0, F(4)) == 1
    assert euler_poly(1, F(0)) == F(-1, 2)
    for n in (1, 3, 5):  # the centered generating function is even in v
        assert euler_poly(n, F(1, 2)) == 0
    assert euler_poly(3, F(0)) == F(1, 4)


def test_frobenius_euler_reduces_to_euler():
    for n in range(7):
        for x in (F(0), F(2, 3)):
            assert frobenius_euler(n, 1, x, F(-1)) == euler_poly(n, x)
    assert frobenius_euler(0, F(3), F(1), F(2)) == 1
    for n in range(5):
        assert frobenius_euler(n, 0, F(2, 7), F(5)) == F(2, 7) ** n
    with pytest.raises(ValueError):
        frobenius_euler(2, 1, F(0), F(1))


def test_prob_families_reduce_to_classical_at_unit_law():
    one = Constant(F(1))
    for n in range(8):
        for x in (F(0), F(1, 2), F(2, 3)):
            assert prob_bernoulli(one, n, x) == higher_bernoulli(n, 1, x)
            assert prob_euler(one, n, x) == euler_poly(n, x)
        assert prob_bernoulli_higher(one, n, 1, F(1, 3)) == higher_bernoulli(
            n, 1, F(1, 3)
        )
        assert prob_bernoulli_higher(one, n, 3, F(1, 3)) == higher_bernoulli(
            n, 3, F(1, 3)
        )


def test_prob_families_trivial_indices():
    for law in SIX_LAWS:
        assert prob_euler(law, 0, F(2, 5)) == 1
        # with zero-th power the generating factor is 1, so only index 0 lives
        assert prob_bernoulli_higher(law, 0, 0, F(0)) == 1
        assert prob_bernoulli_higher(law, 3, 0, F(0)) == 0
        assert prob_bernoulli(law, 0, F(0)) == 1 / law.moment(1)


def test_prob_bernoulli_higher_rejects_zero_mean():
    dead = Constant(F(0))
    with pytest.raises(ValueError):
        prob_bernoulli_higher(dead, 2, 1, F(1))


def test_bernstein_classical_values():
    assert bernstein_classical(1, 2, F(1, 2)) == F(1, 2)
    for n in range(5):
        assert bernstein_classical(0, n, F(0)) == 1
    assert sum(bernstein_classical(r, 3, F(2, 7)) for r in range(4)) == 1
    with pytest.raises(ValueError):
        bernstein_classical(3, 2, F(1, 2))


def test_bernstein_closed_form_equals_series_route():
    for n in range(11):
        for r in range(n + 1):
            for x in (F(1, 3), F(2, 7), F(5, 4)):
                series = Series.monomial(
                    r, x**r * F(1, math.factorial(r)), n
                ) * exp_series(1 - x, n)
                assert bernstein_classical(r, n, x) == series.egf_coeff(n)


def _random_points(count, seed):
    rng = random.Random(seed)
    rhos = [F(1, 2), F(2, 3), F(3, 4), F(4, 3), F(3, 2)]
    out = []
    for _ in range(count):
        d = rng.choice([2, 3, 4])
        out.append(QPoint(rng.choice(rhos), rng.randrange(1, d), d))
    return out


def test_qbernstein_closed_form_equals_series_route():
    for p in _random_points(5, 601):
        x_val = bracket(p)
        one_minus = bracket_conjugates(p)[1]
        for n in range(11):
            for r in range(n + 1):
                series = Series.monomial(
                    r, x_val**r * F(1, math.factorial(r)), n
                ) * exp_series(one_minus, n)
                assert qbernstein(r, n, p) == series.egf_coeff(n)


def test_qbernstein_values():
    assert qbernstein(1, 2, POINT) == F(18, 25)
    assert qbernstein(3, 3, POINT) == bracket(POINT) ** 3
    classical = QPoint.classical(F(2, 7))
    for n in range(7):
        for r in range(n + 1):
            assert qbernstein(r, n, classical) == bernstein_classical(r, n, F(2, 7))


def test_prob_qbernstein_reductions():
    one = Constant(F(1))
    for p in _random_points(3, 77):
        for n in range(7):
            for r in range(n + 1):
                assert prob_qbernstein(one, r, n, p) == qbernstein(r, n, p)
    classical = QPoint.classical(F(1, 3))
    for n in range(7):
        for r in range(n + 1):
            assert prob_qbernstein(one, r, n, classical) == bernstein_classical(
                r, n, F(1, 3)
            )


def test_prob_qbernstein_examples():
    assert prob_qbernstein(Bernoulli(F(1, 2)), 0, 1, POINT) == F(3, 10)
    for law in SIX_LAWS:
        assert prob_qbernstein(law, 4, 4, POINT) == bracket(POINT) ** 4
    with pytest.raises(ValueError):
        prob_qbernstein(Uniform01(), 3, 2, POINT)


def test_prob_qbernstein_laurent_matches_scalar_route():
    rng = random.Random(505)
    laws = SIX_LAWS + [Constant(F(2))]
    points = _random_points(20, 906)
    for i in range(20):
        law = laws[rng.randrange(len(laws))]
        p = points[i]
        n = rng.randrange(0, 7)
        r = rng.randrange(0, n + 1)
        lau = prob_qbernstein_laurent(law, r, n, p.q)
        assert lau.substitute(p.t) == prob_qbernstein(law, r, n, p)


def test_prob_qbernstein_laurent_trivial_forms():
    from qbernstein.qcalc import bracket_in_t

    q = F(4, 9)
    one = Constant(F(1))
    for r in range(4):
        assert prob_qbernstein_laurent(one, r, r, q) == bracket_in_t(q) ** r
    assert prob_qbernstein_laurent(Uniform01(), 0, 0, q) == 1


def test_corrected_derivative_identity_for_all_six_laws():
    """Series-level product-rule recurrence with the exact logarithmic factor."""
    order = 9
    for law in SIX_LAWS:
        for p in _random_points(2, 13):
            x_val = bracket(p)
            one_minus = bracket_conjugates(p)[1]
            m_series = law.mgf_series(order)
            powered = m_series.pow(one_minus)

            def gf(rr):
                if rr < 0:
                    return Series.zero(order)
                return (
                    Series.monomial(rr, x_val**rr * F(1, math.factorial(rr)), order)
                    * powered
                )

            ratio = m_series.derive() * m_series.recip().truncate(order - 1)
            for r in range(4):
                lhs = gf(r).derive()
                rhs = (x_val * gf(r - 1)).truncate(order - 1) + one_minus * (
                    gf(r).truncate(order - 1) * ratio
                )
                assert lhs == rhs
