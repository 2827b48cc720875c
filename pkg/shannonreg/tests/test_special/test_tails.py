import math

import numpy as np
import pytest


@pytest.mark.parametrize("x", np.linspace(-3.0, 26.0, 59).tolist())
def test_ext_erfc_against_scipy(x):
    from scipy import special

    from shannonreg.special import ext_erfc

    assert float(ext_erfc(x)) == pytest.approx(special.erfc(x), rel=1e-13)


@pytest.mark.parametrize("x", [0.5, 1.9, 2.1, 4.0])
def test_ext_erfc_crossover_agrees(x):
    from shannonreg.special import ext_erfc

    series = float(ext_erfc(x, crossover=6.0))
    fraction = float(ext_erfc(x, crossover=0.5))

    assert series == pytest.approx(fraction, rel=1e-14)


@pytest.mark.parametrize("x", np.linspace(0.0, 25.0, 51).tolist())
def test_gauss_tail_against_scipy(x):
    from scipy import special

    from shannonreg.special import gauss_tail

    expected = math.sqrt(math.pi) / 2.0 * special.erfc(x)

    assert gauss_tail(x) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("x", [0.1, 1.0, 3.0])
def test_gauss_tail_against_quadrature(x):
    from scipy import integrate

    from shannonreg.special import gauss_tail

    expected, _ = integrate.quad(lambda t: math.exp(-t * t), x, np.inf)

    assert gauss_tail(x) == pytest.approx(expected, rel=1e-8)


def test_gauss_tail_special_points():
    from shannonreg.special import gauss_tail

    assert gauss_tail(0.0) == pytest.approx(math.sqrt(math.pi) / 2.0)
    assert gauss_tail(40.0) == 0.0
    assert gauss_tail(1e6) == 0.0
    assert gauss_tail(-50.0) == pytest.approx(math.sqrt(math.pi))
    assert gauss_tail(-1.0) + gauss_tail(1.0) == pytest.approx(
        math.sqrt(math.pi), rel=1e-15
    )


def test_gauss_tail_decreasing():
    from shannonreg.special import gauss_tail

    values = [gauss_tail(x) for x in np.linspace(-5.0, 25.0, 200)]

    assert all(a > b for a, b in zip(values, values[1:]))


def test_gauss_tail_rejects_nan():
    from shannonreg.exceptions import DomainError
    from shannonreg.special import gauss_tail

    with pytest.raises(DomainError):
        gauss_tail(float("nan"))


@pytest.mark.parametrize("x", np.geomspace(0.01, 10.0, 200).tolist())
def test_mills_bounds_sandwich(x):
    from shannonreg.special import gauss_tail, mills_bounds

    bounds = mills_bounds(x)
    tail = gauss_tail(x)

    assert bounds.lower < tail < bounds.upper <= bounds.crude_upper


@pytest.mark.parametrize("x", [0.0, -1.0, float("inf")])
def test_mills_bounds_domain(x):
    from shannonreg.exceptions import DomainError
    from shannonreg.special import mills_bounds

    with pytest.raises(DomainError):
        mills_bounds(x)


@pytest.mark.parametrize("eps", [0.01, 1 / 7, 0.5, 0.99])
def test_eps_lower_below_tail(eps):
    from shannonreg.special import eps_lower, eps_threshold, gauss_tail

    for x in np.linspace(eps_threshold(eps), 26.0, 50):
        assert eps_lower(x, eps) < gauss_tail(x)


@pytest.mark.parametrize("eps", [0.01, 1 / 7, 0.5, 0.99])
def test_eps_lower_matches_mills_at_threshold(eps):
    from shannonreg.special import eps_lower, eps_threshold, mills_bounds

    x = eps_threshold(eps)

    assert eps_lower(x, eps) == pytest.approx(
        mills_bounds(x).lower, rel=1e-12
    )


def test_eps_lower_domain():
    from shannonreg.exceptions import DomainError
    from shannonreg.special import eps_lower, eps_threshold

    with pytest.raises(DomainError):
        eps_lower(0.9 * eps_threshold(1 / 7), 1 / 7)
    for eps in [0.0, 1.0, -0.5, 2.0]:
        with pytest.raises(DomainError):
            eps_threshold(eps)


def test_eps_threshold_value():
    from shannonreg.special import eps_threshold

    assert eps_threshold(1 / 7) == pytest.approx(
        math.sqrt(2.0 / ((1 / 7) * (2 + 1 / 7)))
    )
