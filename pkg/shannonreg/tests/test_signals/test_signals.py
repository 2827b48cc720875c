import math

import numpy as np
import pytest


@pytest.mark.parametrize("x", [1, -1, 2, 7, -25, 1000])
def test_sinc_vanishes_at_integers(x):
    from shannonreg.signals import sinc

    assert sinc(x) == 0.0


@pytest.mark.parametrize(
    "x", [0.0, 1e-12, 0.25, -0.5, 1.5, 3.3, -7.9, 1e-5, 100.25]
)
def test_sinc_against_numpy(x):
    from shannonreg.signals import sinc

    assert sinc(x) == pytest.approx(np.sinc(x), rel=1e-12, abs=1e-300)


def test_sinc_even():
    from shannonreg.signals import sinc

    for x in np.linspace(0.01, 20.0, 57):
        assert sinc(x) == sinc(-x)


def test_sinc_at_zero():
    from shannonreg.signals import sinc

    assert sinc(0.0) == 1.0


@pytest.mark.parametrize("delta", [0.0, -1.0, math.pi, 4.0, float("nan")])
def test_bandwidth_domain(delta):
    from shannonreg.exceptions import DomainError
    from shannonreg.signals import Bandwidth

    with pytest.raises(DomainError):
        Bandwidth(delta)


def test_f0_peak_and_symmetry():
    from shannonreg.signals import f0_eval

    delta = math.pi / 4

    assert f0_eval(delta, 0.5) == pytest.approx(math.sqrt(delta / math.pi))
    for t in np.linspace(-10.0, 10.0, 41):
        assert f0_eval(delta, 0.5 + t) == pytest.approx(
            f0_eval(delta, 0.5 - t), rel=1e-14, abs=1e-300
        )


def test_f0_closed_form():
    from shannonreg.signals import f0_eval

    delta = math.pi / 4
    t = 3.25
    expected = math.sin((t - 0.5) * delta) / (
        math.sqrt(math.pi * delta) * (t - 0.5)
    )

    assert f0_eval(delta, t) == pytest.approx(expected, rel=1e-14)


def test_f0_vectorized_agrees():
    from shannonreg.signals import ShiftedSincSignal

    signal = ShiftedSincSignal(math.pi / 4)
    ts = np.linspace(-30.0, 30.0, 301)

    many = signal.evaluate_many(ts)

    for t, value in zip(ts, many):
        assert value == pytest.approx(signal(t), rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("xi", [0.0, 0.5, -0.785, 0.79, 3.0])
def test_f0_hat_abs(xi):
    from shannonreg.signals import f0_hat_abs

    delta = math.pi / 4
    expected = 1.0 / math.sqrt(2.0 * delta) if abs(xi) <= delta else 0.0

    assert f0_hat_abs(delta, xi) == expected


@pytest.mark.parametrize("delta", [math.pi / 4, math.pi / 2])
def test_norm_estimate_of_f0(delta):
    from shannonreg.signals import ShiftedSincSignal, pw_norm_estimate

    norm = pw_norm_estimate(ShiftedSincSignal(delta), 1e4, 0.01)

    assert norm == pytest.approx(1.0, abs=1e-3)


def test_norm_estimate_domain():
    from shannonreg.exceptions import DomainError
    from shannonreg.signals import ShiftedSincSignal, pw_norm_estimate

    with pytest.raises(DomainError):
        pw_norm_estimate(ShiftedSincSignal(1.0), 0.0, 0.01)
    with pytest.raises(DomainError):
        pw_norm_estimate(ShiftedSincSignal(1.0), 10.0, -0.1)


def test_base_signal_not_implemented():
    from shannonreg.signals import PWSignal

    signal = PWSignal(1.0)

    assert signal.declared_norm is None
    with pytest.raises(NotImplementedError):
        signal(0.0)


def test_callable_signal():
    from shannonreg.exceptions import DomainError
    from shannonreg.signals import CallableSignal, sinc

    signal = CallableSignal(2.0, lambda t: sinc(2.0 * t / math.pi))

    assert signal(0.0) == 1.0
    np.testing.assert_allclose(
        signal.evaluate_many([0.0, math.pi / 2.0]), [1.0, 0.0], atol=1e-15
    )
    with pytest.raises(DomainError):
        CallableSignal(2.0, 3.0)


def test_f0_samples_layout():
    from shannonreg.signals import f0_eval, f0_samples

    delta = math.pi / 4
    samples = f0_samples(delta, 7)

    assert len(samples) == 14
    assert list(samples.nodes) == list(range(-6, 8))
    assert samples[-6] == f0_eval(delta, -6)
    assert samples[7] == f0_eval(delta, 7)
    # f0 is symmetric about 1/2, so f(j) = f(1 - j).
    for j in range(-6, 8):
        assert samples[j] == pytest.approx(samples[1 - j], rel=1e-15)
    with pytest.raises(KeyError):
        samples[8]
    with pytest.raises(KeyError):
        samples[-7]


def test_sample_set_validation():
    from shannonreg.exceptions import DomainError
    from shannonreg.signals import SampleSet

    with pytest.raises(DomainError):
        SampleSet(2, [1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        SampleSet(1, [1.0, 2.0])
    with pytest.raises(DomainError):
        SampleSet(2, [1.0, 2.0, float("nan"), 4.0])
    with pytest.raises(DomainError):
        SampleSet.from_pairs([(0, 1.0), (1, 2.0), (2, 3.0)])
    with pytest.raises(DomainError):
        SampleSet.from_pairs([(0, 1.0), (1, 2.0), (2, 3.0), (3, 4.0)])


def test_sample_set_from_pairs_and_combine():
    from shannonreg.exceptions import DomainError
    from shannonreg.signals import SampleSet

    a = SampleSet.from_pairs([(-1, 1.0), (0, 2.0), (1, 3.0), (2, 4.0)])
    b = SampleSet(2, [0.5, 0.5, 0.5, 0.5])

    assert a.pairs == [(-1, 1.0), (0, 2.0), (1, 3.0), (2, 4.0)]
    assert a.combine(2.0, b, -4.0) == SampleSet(2, [0.0, 2.0, 4.0, 6.0])
    assert a != b
    with pytest.raises(DomainError):
        a.combine(1.0, SampleSet(3, [0.0] * 6), 1.0)


def test_read_samples_fixture():
    from shannonreg.signals import f0_samples, read_samples
    from shannonreg.utils.testing import get_file_path

    samples = read_samples(get_file_path("data", "f0_samples_n2.txt"))
    expected = f0_samples(math.pi / 4, 2)

    assert samples.n == 2
    np.testing.assert_allclose(samples.values, expected.values, rtol=1e-9)


def test_write_then_read_samples(tmp_path):
    from shannonreg.signals import f0_samples, read_samples, write_samples

    samples = f0_samples(math.pi / 4, 5)
    path = str(tmp_path / "samples.txt")

    write_samples(samples, path)

    assert read_samples(path) == samples
    with open(path) as fin:
        assert fin.readline() == "# j,value\n"


@pytest.mark.parametrize(
    "content",
    [
        "0,1.0\n1,abc\n",
        "0,1.0\n1,2.0,3.0\n",
        "0,1.0\n2,2.0\n",
        "0,1.0\n1,2.0\n2,3.0\n",
        "",
    ],
)
def test_read_samples_malformed(content, tmp_path):
    from shannonreg.exceptions import SampleFileError
    from shannonreg.signals import read_samples

    path = tmp_path / "bad.txt"
    path.write_text(content)

    with pytest.raises(SampleFileError):
        read_samples(str(path))


def test_norm_estimate_defaults_from_configuration(mocker):
    import copy

    from shannonreg.config import _DEFAULT_CONFIG, config
    from shannonreg.signals import ShiftedSincSignal, pw_norm_estimate

    resolved = copy.deepcopy(_DEFAULT_CONFIG)
    resolved["norm"] = {"half_width": 50.0, "step": 0.5}
    mocker.patch.object(config, "get_config", return_value=resolved)
    signal = ShiftedSincSignal(math.pi / 4)

    assert pw_norm_estimate(signal) == pw_norm_estimate(signal, 50.0, 0.5)
    assert pw_norm_estimate(signal, step=0.25) == pw_norm_estimate(
        signal, 50.0, 0.25
    )


def test_read_samples_not_utf8(tmp_path):
    from shannonreg.exceptions import SampleFileError
    from shannonreg.signals import read_samples

    path = tmp_path / "binary.txt"
    path.write_bytes(b"0,0.5\n\xff\xfe,1\n")

    with pytest.raises(SampleFileError):
        read_samples(str(path))


def test_f0_double_double_rounds_to_float():
    from shannonreg.signals import ShiftedSincSignal, ext_f0_eval, f0_eval

    delta = math.pi / 4
    signal = ShiftedSincSignal(delta)

    for t in [-24.0, -3.5, 0.0, 0.37, 0.5, 1.0, 12.25]:
        value = ext_f0_eval(delta, t)
        assert float(value) == f0_eval(delta, t)
        assert signal.ext_evaluate(t) == value
    assert float(ext_f0_eval(delta, 0.5)) == pytest.approx(
        math.sqrt(delta / math.pi), rel=1e-15
    )
