import math

import numpy as np
import pytest


def _table():
    from shannonreg.harness import read_csv
    from shannonreg.utils.testing import get_file_path

    return read_csv(get_file_path("data", "error_table.csv"))


DELTA = math.pi / 4
EPS = 1 / 7
C_FLOOR = 0.0666687


@pytest.mark.parametrize("n", list(range(7, 26, 2)))
def test_closed_form_columns(n):
    from shannonreg.bounds import lower_bound_opt, upper_bound_opt

    row = [r for r in _table() if r.n == n][0]

    assert lower_bound_opt(DELTA, EPS, n, c_value=C_FLOOR) == pytest.approx(
        row.lower, rel=1e-4
    )
    assert upper_bound_opt(DELTA, n) == pytest.approx(row.upper, rel=1e-4)


@pytest.mark.parametrize("n", list(range(7, 26, 2)))
def test_closed_form_columns_print_as_table(n):
    from shannonreg.bounds import lower_bound_opt, upper_bound_opt

    row = [r for r in _table() if r.n == n][0]
    lower = lower_bound_opt(DELTA, EPS, n, c_value=C_FLOOR)

    assert "{:.4e}".format(lower) == "{:.4e}".format(row.lower)
    assert "{:.4e}".format(upper_bound_opt(DELTA, n)) == "{:.4e}".format(
        row.upper
    )


@pytest.mark.parametrize("n", list(range(7, 26, 2)))
def test_lower_bound_with_own_constant(n):
    from shannonreg.bounds import lower_bound_opt

    row = [r for r in _table() if r.n == n][0]

    assert lower_bound_opt(DELTA, EPS, n) == pytest.approx(
        row.lower, rel=1e-4
    )


def test_c_at_smallest_window():
    from shannonreg.bounds import c_const
    from shannonreg.reconstruct import optimal_width

    value = c_const(DELTA, EPS, optimal_width(DELTA, 7))

    assert value == pytest.approx(0.0666687041, rel=1e-7)


def test_certified_c_floor():
    from shannonreg.bounds import c_const, certified_c_floor
    from shannonreg.reconstruct import optimal_width

    values = [
        c_const(DELTA, EPS, optimal_width(DELTA, n)) for n in range(7, 201)
    ]

    floor = certified_c_floor(DELTA, EPS, 7)

    assert floor == C_FLOOR
    assert abs(min(values) - C_FLOOR) < 1e-6
    assert min(values) >= C_FLOOR
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_certified_c_floor_errors():
    from shannonreg.bounds import certified_c_floor
    from shannonreg.exceptions import CertificateInvalid, DomainError

    with pytest.raises(DomainError):
        certified_c_floor(DELTA, EPS, 10, 9)
    with pytest.raises(CertificateInvalid):
        certified_c_floor(math.pi / 1000, 1 / 20, 2, 10)


def test_sufficient_c_positive_on_scan_range():
    from shannonreg.bounds import sufficient_c
    from shannonreg.utils import ReferenceRun

    deltas = np.linspace(
        ReferenceRun.SCAN_DELTA_MIN, ReferenceRun.SCAN_DELTA_MAX, 200
    )

    assert all(sufficient_c(d, ReferenceRun.SCAN_EPS) > 0 for d in deltas)


@pytest.mark.parametrize("delta", [math.pi / 1000, 0.499999 * math.pi])
def test_sufficient_c_negative_outside(delta):
    from shannonreg.bounds import sufficient_c

    assert sufficient_c(delta, 1 / 20) < 0


def test_n_min():
    from shannonreg.bounds import n_min
    from shannonreg.exceptions import DomainError

    assert n_min(DELTA, EPS, C_FLOOR) == 7
    with pytest.raises(DomainError):
        n_min(DELTA, EPS, 0.0)
    with pytest.raises(DomainError):
        n_min(DELTA, EPS, -1.0)


def test_lower_bound_opt_invalid():
    from shannonreg.bounds import lower_bound_opt
    from shannonreg.exceptions import CertificateInvalid

    with pytest.raises(CertificateInvalid):
        lower_bound_opt(DELTA, EPS, 5)
    with pytest.raises(CertificateInvalid):
        lower_bound_opt(math.pi / 2, EPS, 25)
    with pytest.raises(CertificateInvalid):
        lower_bound_opt(DELTA, EPS, 25, c_value=-0.1)


@pytest.mark.parametrize("eps", [0.0, 1.0, -0.2, float("nan")])
def test_mills_epsilon_domain(eps):
    from shannonreg.bounds import MillsEpsilon
    from shannonreg.exceptions import DomainError

    with pytest.raises(DomainError):
        MillsEpsilon(eps)


def test_corridor():
    from shannonreg.bounds import BoundParams
    from shannonreg.reconstruct import optimal_width

    r_min, r_max = BoundParams(DELTA, EPS, 7).corridor()

    assert r_min == pytest.approx(
        2.0 / (math.sqrt(EPS * (2.0 + EPS)) * (math.pi - DELTA))
    )
    assert r_max == optimal_width(DELTA, 7)
    assert r_min < r_max


def test_lower_bound_general_preconditions():
    from shannonreg.bounds import BoundParams, lower_bound_general
    from shannonreg.exceptions import CertificateInvalid

    # the corridor is empty below n = 7
    with pytest.raises(CertificateInvalid):
        lower_bound_general(BoundParams(DELTA, EPS, 6))
    with pytest.raises(CertificateInvalid):
        lower_bound_general(BoundParams(DELTA, EPS, 25, r=1.0))
    with pytest.raises(CertificateInvalid):
        lower_bound_general(BoundParams(DELTA, EPS, 25, r=10.0))
    with pytest.raises(CertificateInvalid):
        lower_bound_general(BoundParams(1.7, EPS, 25))


@pytest.mark.parametrize("n", [7, 12, 25])
def test_lower_bound_general_at_optimal_width(n):
    from shannonreg.bounds import (
        BoundParams,
        e1_lower_bound,
        f0_truncation_bound,
        lower_bound_general,
        lower_bound_opt,
    )

    params = BoundParams(DELTA, EPS, n)

    value = lower_bound_general(params)

    assert value == pytest.approx(lower_bound_opt(DELTA, EPS, n), rel=1e-10)
    assert value == pytest.approx(
        e1_lower_bound(DELTA, EPS, params.r)
        - f0_truncation_bound(DELTA, params.r, n),
        rel=1e-10,
    )


@pytest.mark.parametrize("n", list(range(2, 40)))
def test_upper_bound_general_below_opt(n):
    from shannonreg.bounds import upper_bound_general, upper_bound_opt
    from shannonreg.reconstruct import optimal_width

    general = upper_bound_general(DELTA, optimal_width(DELTA, n), n)
    opt = upper_bound_opt(DELTA, n)

    assert general <= opt * (1.0 + 1e-12)
    assert general >= 0.999 * opt


def test_upper_bound_terms_sum():
    from shannonreg.bounds import (
        e2_tail_bound,
        upper_bound_general,
        upper_bound_terms,
    )

    terms = upper_bound_terms(DELTA, 2.5, 15)

    assert terms.truncation == e2_tail_bound(DELTA, 2.5, 15)
    assert upper_bound_general(DELTA, 2.5, 15) == (
        terms.aliasing + terms.main + terms.truncation
    )
    assert all(v > 0 for v in terms)


def test_optimal_width_nearly_minimizes_upper_bound():
    from shannonreg.bounds import upper_bound_general
    from shannonreg.reconstruct import optimal_width

    n = 25
    r_opt = optimal_width(DELTA, n)
    widths = np.linspace(0.8 * r_opt, 1.25 * r_opt, 500)

    values = [upper_bound_general(DELTA, r, n) for r in widths]
    at_opt = upper_bound_general(DELTA, r_opt, n)
    best = int(np.argmin(values))

    assert abs(widths[best] - r_opt) < 0.05 * r_opt
    assert values[best] >= 0.5 * at_opt
    assert values[0] > at_opt
    assert values[-1] > at_opt


def test_upper_bound_minimized_at_corridor_end():
    from shannonreg.bounds import r_corridor, upper_bound_general

    n = 25
    r_min, r_max = r_corridor(DELTA, EPS, n)
    widths = np.linspace(r_min, r_max, 500)

    values = [upper_bound_general(DELTA, r, n) for r in widths]

    assert int(np.argmin(values)) >= len(widths) - 2


def test_bounds_decay():
    from shannonreg.bounds import lower_bound_opt, upper_bound_opt

    uppers = [upper_bound_opt(DELTA, n) for n in range(2, 60)]
    lowers = [lower_bound_opt(DELTA, EPS, n) for n in range(7, 60)]

    assert all(a > b for a, b in zip(uppers, uppers[1:]))
    assert all(a > b for a, b in zip(lowers, lowers[1:]))


def test_rates_bracket_theoretical():
    from shannonreg.bounds import (
        lower_bound_opt,
        theoretical_rate,
        upper_bound_opt,
    )

    rate = theoretical_rate(DELTA)
    ns = np.arange(15, 26, 2)

    for bound in [
        [upper_bound_opt(DELTA, n) for n in ns],
        [lower_bound_opt(DELTA, EPS, n, c_value=C_FLOOR) for n in ns],
    ]:
        slope = np.polyfit(ns, np.log(bound), 1)[0]
        assert slope == pytest.approx(rate, rel=0.1)
    assert rate == pytest.approx(-3 * math.pi / 8)


def test_bound_pair():
    from shannonreg.bounds import (
        BoundParams,
        bound_pair,
        lower_bound_general,
        lower_bound_opt,
        upper_bound_general,
        upper_bound_opt,
    )

    pair = bound_pair(DELTA, EPS, 9)
    assert pair.lower == lower_bound_opt(DELTA, EPS, 9)
    assert pair.upper == upper_bound_opt(DELTA, 9)

    pair = bound_pair(DELTA, EPS, 25, r=3.1)
    assert pair.lower == lower_bound_general(BoundParams(DELTA, EPS, 25, 3.1))
    assert pair.upper == upper_bound_general(DELTA, 3.1, 25)
    assert pair.lower < pair.upper
