import math
from dataclasses import replace

import pytest

from src.ANALYTIC.analytic import (
    all_reception_probabilities,
    equalize_sensitivities,
    homogeneous_coefficient,
    homogeneous_equivalent,
    intensity_coefficient,
    power_mass,
    reception_probability,
)
from src.ANALYTIC.scenario import Scenario, build_classes, default_scenario, nodes_to_lambda_s
from src.CHANNEL.channel import NO_FADING, FadingKind, FadingModel, mw_to_dbm
from src.GENERAL.exceptions import InvalidParameterError
from src.PHY.lora_phy import RadioConfig


def test_lambda_s_of_default_scenario(scn):
    assert scn.lambda_s == pytest.approx(4.974e-6, rel=1e-3)
    assert scn.lam == pytest.approx(scn.lambda_s * 1e-3)
    assert scn.n_nodes == pytest.approx(1000)


def test_nodes_to_lambda_s_is_planar_density():
    assert nodes_to_lambda_s(1000, 8000) == pytest.approx(1000 / (math.pi * 8000**2), rel=1e-14)
    with pytest.raises(InvalidParameterError):
        nodes_to_lambda_s(10, 0)
    with pytest.raises(InvalidParameterError):
        nodes_to_lambda_s(-1, 8000)


def test_intensity_coefficient_default(scn):
    expected = 1.5625e-8 * 10 ** (4 / 7) * math.gamma(1 + 4 / 7) / 0.25
    assert intensity_coefficient(scn) == pytest.approx(expected, rel=1e-12)
    assert intensity_coefficient(scn) == pytest.approx(2.08e-7, rel=5e-3)


def test_alpha_zero_matches_homogeneous_path(scn):
    assert intensity_coefficient(scn) == pytest.approx(homogeneous_coefficient(scn), rel=1e-14)


def test_zero_density_gives_certain_reception(scn):
    empty = scn.with_nodes(0)
    assert intensity_coefficient(empty) == 0.0
    assert [r.pi for r in all_reception_probabilities(empty)] == [1.0] * 7


def test_single_class_identity():
    radio = RadioConfig()
    single = Scenario(lambda_s=1e-6, radio=radio, classes=build_classes(radio, {7: -124.0}))
    cls = single.get_class(1)
    coefficient = cls.sensitivity_mw ** single.exponent / cls.window_s
    result = reception_probability(single, 1, coefficient=coefficient)
    assert result.pi == pytest.approx(math.exp(-1), rel=1e-12)
    assert single.upper_bound_mw(1) is None


def test_default_scenario_probabilities(scn):
    results = all_reception_probabilities(scn)
    assert [r.sf for r in results] == [12, 11, 10, 9, 8, 7, 6]
    pis = [r.pi for r in results]
    # ослабленные классы SF12..SF7 упорядочены по возрастанию Pi
    assert all(a <= b for a, b in zip(pis[:6], pis[1:6]))
    assert pis[0] == pytest.approx(0.0059, abs=5e-4)
    assert pis[6] == pytest.approx(0.942, abs=1e-3)
    for r in results:
        assert r.pi == pytest.approx(math.exp(-r.mass), rel=1e-12)
        assert r.mass == pytest.approx(power_mass(scn, r.index_n), rel=1e-12)


def test_class_index_out_of_range(scn):
    with pytest.raises(InvalidParameterError):
        reception_probability(scn, 0)
    with pytest.raises(InvalidParameterError):
        reception_probability(scn, 8)


def test_probability_nonincreasing_in_density(scn):
    previous = None
    for n_nodes in range(100, 2001, 100):
        pis = [r.pi for r in all_reception_probabilities(scn.with_nodes(n_nodes))]
        if previous is not None:
            assert all(p <= q for p, q in zip(pis, previous))
        previous = pis


@pytest.mark.parametrize("n_nodes", [500, 1000, 2000])
@pytest.mark.parametrize("target", [0.9, 0.95, 0.99])
def test_equalize_round_trip(n_nodes, target):
    base = default_scenario(n_nodes)
    equalized = base.with_sensitivities(equalize_sensitivities(base, target))
    for result in all_reception_probabilities(equalized):
        assert abs(result.pi - target) <= 1e-9


def test_equalized_thresholds_increase_with_target(scn):
    low = equalize_sensitivities(scn, 0.95)
    high = equalize_sensitivities(scn, 0.99)
    assert all(b > a for a, b in zip(low, high))
    assert all(a < b for a, b in zip(low, low[1:]))


def test_equalized_default_range(scn):
    dbm = [mw_to_dbm(p) for p in equalize_sensitivities(scn, 0.95)]
    assert dbm[0] == pytest.approx(-125.6, abs=0.2)
    assert dbm[-1] == pytest.approx(-119.8, abs=0.2)


@pytest.mark.parametrize("target", [0.0, 1.0, -0.5, 1.5])
def test_equalize_rejects_target(scn, target):
    with pytest.raises(InvalidParameterError):
        equalize_sensitivities(scn, target)


def test_equalize_rejects_zero_interference(scn):
    with pytest.raises(InvalidParameterError):
        equalize_sensitivities(scn.with_nodes(0), 0.95)


@pytest.mark.parametrize("alpha", [-0.2, -1.0, 0.5])
def test_homogeneous_equivalent_identity(scn, alpha):
    inhomogeneous = scn.with_alpha(alpha)
    equivalent = homogeneous_equivalent(inhomogeneous)
    assert equivalent.alpha == 0.0
    for a, b in zip(all_reception_probabilities(inhomogeneous), all_reception_probabilities(equivalent)):
        assert a.pi == pytest.approx(b.pi, rel=1e-12, abs=1e-12)


def test_homogeneous_equivalent_parameters(scn):
    inhomogeneous = replace(scn, alpha=-0.2)
    equivalent = homogeneous_equivalent(inhomogeneous)
    assert equivalent.pathloss.beta == pytest.approx(3.8889, abs=1e-4)
    assert equivalent.lambda_s == pytest.approx(0.9673 * scn.lambda_s, rel=1e-4)
    assert equivalent.pathloss.kappa == scn.pathloss.kappa


def test_homogeneous_equivalent_identity_at_zero(scn):
    assert homogeneous_equivalent(scn) is scn


def test_with_alpha_keeps_lambda_s(scn):
    inhomogeneous = scn.with_alpha(-0.2)
    assert inhomogeneous.alpha == -0.2
    assert inhomogeneous.lambda_s == scn.lambda_s
    assert inhomogeneous.with_nodes(1000).lambda_s == scn.lambda_s


def test_inhomogeneous_default_probabilities(scn):
    pis = [r.pi for r in all_reception_probabilities(scn.with_alpha(-0.2))]
    expected = [0.5208, 0.7731, 0.8531, 0.9458, 0.9789, 0.9919, 0.9898]
    assert pis == pytest.approx(expected, abs=1e-3)


def test_homogeneous_equivalent_rejects_flat_exponent(scn):
    with pytest.raises(InvalidParameterError):
        homogeneous_equivalent(replace(scn, alpha=1.5))


def test_alpha_domain(scn):
    with pytest.raises(InvalidParameterError):
        replace(scn, alpha=-2.0)


@pytest.mark.parametrize("fading", [FadingModel(FadingKind.rayleigh), FadingModel(FadingKind.lognormal, 2.0)])
def test_fading_improves_reception(scn, fading):
    for n_nodes in range(100, 2001, 100):
        base = scn.with_nodes(n_nodes)
        plain = all_reception_probabilities(base.with_fading(NO_FADING))
        faded = all_reception_probabilities(base.with_fading(fading))
        assert all(f.pi >= p.pi for f, p in zip(faded, plain))


def test_scenario_rejects_bad_classes():
    radio = RadioConfig()
    with pytest.raises(InvalidParameterError):
        Scenario(lambda_s=1e-6, radio=radio, classes=build_classes(radio, {7: -130.0, 8: -124.0}))
    with pytest.raises(InvalidParameterError):
        Scenario(lambda_s=1e-6, radio=radio, classes=())
