from fractions import Fraction as F

import pytest

from qbernstein.distributions import (
    Bernoulli,
    Binomial,
    Constant,
    CustomMoments,
    Geometric,
    NegBinomial,
    Poisson,
    Uniform01,
)
from qbernstein.series import Series, exp_series

from oracles import (
    bernoulli_moment,
    binomial_moment,
    geometric_moment_enclosure,
    negbinomial_moment_enclosure,
    touchard,
    uniform_moment,
)

ALL_LAWS = [
    Poisson(F(2, 3)),
    Bernoulli(F(1, 3)),
    Binomial(4, F(2, 5)),
    Geometric(F(1, 2)),
    NegBinomial(3, F(3, 5)),
    Uniform01(),
    Constant(F(5, 2)),
    CustomMoments((F(1), F(1, 2), F(2), F(3), F(10))),
]


def test_uniform_mgf_values():
    assert Uniform01().mgf_series(3) == Series([F(1), F(1, 2), F(1, 6), F(1, 24)])


def test_bernoulli_mgf_structure():
    p1 = F(2, 7)
    s = Bernoulli(p1).mgf_series(6)
    assert s.coeffs[0] == 1
    e = exp_series(F(1), 6)
    for n in range(1, 7):
        assert s.coeffs[n] == p1 * e.coeffs[n]


def test_constant_one_is_the_exponential():
    assert Constant(F(1)).mgf_series(8) == exp_series(F(1), 8)


@pytest.mark.parametrize("law", ALL_LAWS, ids=lambda d: d.name)
def test_mgf_constant_term_is_one(law):
    assert law.mgf_series(4).coeffs[0] == 1
    assert law.moment(0) == 1


def test_poisson_moments_match_touchard_recurrence():
    for alpha in (F(2, 3), F(1), F(7, 4)):
        law = Poisson(alpha)
        for n in range(13):
            assert law.moment(n) == touchard(n, alpha)
    assert Poisson(F(2, 3)).moment(2) == F(2, 3) + F(4, 9)


def test_bernoulli_moments():
    law = Bernoulli(F(3, 7))
    for n in range(13):
        assert law.moment(n) == bernoulli_moment(F(3, 7), n)


def test_binomial_moments_match_pmf_sum():
    law = Binomial(5, F(2, 7))
    for n in range(13):
        assert law.moment(n) == binomial_moment(5, F(2, 7), n)


def test_uniform_moments():
    law = Uniform01()
    for n in range(13):
        assert law.moment(n) == uniform_moment(n)


def test_geometric_moments_lie_in_partial_sum_enclosures():
    law = Geometric(F(1, 2))
    assert law.moment(1) == 2
    for n in range(13):
        value = law.moment(n)
        for eps in (F(1, 10**10), F(1, 10**20), F(1, 10**30)):
            partial, bound = geometric_moment_enclosure(F(1, 2), n, eps)
            assert bound < eps
            assert partial <= value <= partial + bound


def test_negbinomial_moments_lie_in_partial_sum_enclosures():
    law = NegBinomial(2, F(2, 3))
    for n in range(13):
        value = law.moment(n)
        for eps in (F(1, 10**10), F(1, 10**25)):
            partial, bound = negbinomial_moment_enclosure(2, F(2, 3), n, eps)
            assert bound < eps
            assert partial <= value <= partial + bound


def test_binomial_is_a_power_of_bernoulli():
    for trials in (1, 2, 3, 4):
        assert Binomial(trials, F(1, 3)).mgf_series(9) == Bernoulli(
            F(1, 3)
        ).mgf_series(9).pow(trials)


def test_negbinomial_is_a_power_of_geometric():
    for a in (1, 2, 3):
        assert NegBinomial(a, F(2, 5)).mgf_series(9) == Geometric(
            F(2, 5)
        ).mgf_series(9).pow(a)


def test_parameter_validation():
    with pytest.raises(ValueError):
        Poisson(F(0))
    with pytest.raises(ValueError):
        Poisson(F(-1, 2))
    with pytest.raises(ValueError):
        Bernoulli(F(0))
    with pytest.raises(ValueError):
        Bernoulli(F(3, 2))
    with pytest.raises(ValueError):
        Binomial(0, F(1, 2))
    with pytest.raises(ValueError):
        Geometric(F(7, 5))
    with pytest.raises(ValueError):
        NegBinomial(0, F(1, 2))
    with pytest.raises(ValueError):
        CustomMoments((F(2),))


def test_custom_moments_runs_out_of_data():
    law = CustomMoments((F(1), F(1), F(2)))
    assert law.moment(2) == 2
    with pytest.raises(ValueError):
        law.mgf_series(3)


def test_degenerate_geometric_is_constant_one():
    assert Geometric(F(1)).mgf_series(6) == exp_series(F(1), 6)
