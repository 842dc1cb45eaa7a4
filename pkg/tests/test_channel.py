import math

import numpy as np
import pytest
from scipy import integrate, stats

from src.CHANNEL.channel import (
    NO_FADING,
    RAYLEIGH,
    FadingKind,
    FadingModel,
    PathLossParams,
    dbm_to_mw,
    fading_moment,
    fading_upper_quantile,
    hata_exponent,
    mw_to_dbm,
    parse_fading,
    path_gain,
    sample_fading,
)
from src.GENERAL.exceptions import InvalidParameterError

S = 2 / 3.5
LOGNORMAL_2DB = FadingModel(FadingKind.lognormal, 2.0)


def test_path_gain_unit_at_inverse_kappa():
    assert path_gain(2.0, PathLossParams(3.5, 0.5)) == pytest.approx(1.0)


def test_path_gain_8km():
    loss_db = 10 * math.log10(path_gain(8000.0, PathLossParams(3.5, 0.5)))
    assert loss_db == pytest.approx(35 * math.log10(4000), abs=1e-9)
    assert loss_db == pytest.approx(126.07, abs=0.01)
    assert 10 - loss_db == pytest.approx(-116.07, abs=0.01)


def test_path_gain_reaches_sf12_sensitivity():
    received = 10 - 10 * math.log10(path_gain(2 * 10**4.2, PathLossParams(3.5, 0.5)))
    assert received == pytest.approx(-137.0, abs=1e-9)


def test_path_gain_rejects_distance():
    with pytest.raises(InvalidParameterError):
        path_gain(0.0, PathLossParams())


@pytest.mark.parametrize("beta, kappa", [(2.0, 0.5), (1.5, 0.5), (3.5, 0.0)])
def test_path_loss_params_validation(beta, kappa):
    with pytest.raises(InvalidParameterError):
        PathLossParams(beta, kappa)


@pytest.mark.parametrize("s", [0.1, S, 1.0, 2.5])
def test_no_fading_moment(s):
    assert fading_moment(NO_FADING, s) == 1.0


def test_rayleigh_moment_against_quadrature():
    oracle, _ = integrate.quad(lambda x: x**S * math.exp(-x), 0, math.inf)
    assert fading_moment(RAYLEIGH, S) == pytest.approx(oracle, abs=1e-7)
    assert fading_moment(RAYLEIGH, S) == pytest.approx(0.8906177, abs=1e-6)


def test_rayleigh_moment_equals_gamma_form():
    beta = 3.5
    assert fading_moment(RAYLEIGH, 2 / beta) == pytest.approx(2 * math.gamma(2 / beta) / beta, rel=1e-12)


def test_lognormal_moment_against_quadrature_and_closed_form():
    sigma = LOGNORMAL_2DB.sigma
    oracle, _ = integrate.quad(
        lambda z: math.exp(S * (-(sigma**2) / 2 + sigma * z)) * stats.norm.pdf(z), -math.inf, math.inf
    )
    value = fading_moment(LOGNORMAL_2DB, S)
    assert value == pytest.approx(oracle, abs=1e-7)
    assert value == pytest.approx(math.exp(sigma**2 * (2 - 3.5) / 3.5**2), rel=1e-12)
    assert value == pytest.approx(0.9744, abs=1e-4)


def test_lognormal_moment_by_sampling():
    rng = np.random.default_rng(7)
    samples = sample_fading(LOGNORMAL_2DB, rng, size=1_000_000)
    assert np.mean(samples**S) == pytest.approx(fading_moment(LOGNORMAL_2DB, S), abs=2e-3)


@pytest.mark.parametrize("model", [RAYLEIGH, LOGNORMAL_2DB])
@pytest.mark.parametrize("s", [S, 1.8 / 3.5])
def test_moment_by_sampling(model, s):
    rng = np.random.default_rng(11)
    samples = sample_fading(model, rng, size=1_000_000)
    assert np.mean(samples**s) == pytest.approx(fading_moment(model, s), abs=2e-3)


@pytest.mark.parametrize("model", [NO_FADING, RAYLEIGH, LOGNORMAL_2DB])
def test_moment_below_one_for_fractional_order(model):
    assert fading_moment(model, S) <= 1.0 + 1e-9


@pytest.mark.parametrize("model", [NO_FADING, RAYLEIGH, LOGNORMAL_2DB])
@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
def test_moment_above_one_for_order_above_one(model, s):
    assert fading_moment(model, s) >= 1.0 - 1e-9


def test_moment_rejects_nonpositive_order():
    with pytest.raises(InvalidParameterError):
        fading_moment(RAYLEIGH, 0.0)


@pytest.mark.parametrize("model", [RAYLEIGH, LOGNORMAL_2DB])
def test_sample_mean_is_one(model):
    rng = np.random.default_rng(2024)
    assert np.mean(sample_fading(model, rng, size=1_000_000)) == pytest.approx(1.0, abs=0.01)


def test_sample_no_fading():
    rng = np.random.default_rng(1)
    assert sample_fading(NO_FADING, rng) == 1.0
    assert np.all(sample_fading(NO_FADING, rng, size=5) == 1.0)
    assert isinstance(sample_fading(RAYLEIGH, rng), float)


def test_upper_quantile():
    assert fading_upper_quantile(NO_FADING, 1e-7) == 1.0
    assert fading_upper_quantile(RAYLEIGH, 1e-7) == pytest.approx(-math.log(1e-7))
    q = fading_upper_quantile(LOGNORMAL_2DB, 1e-7)
    sigma = LOGNORMAL_2DB.sigma
    tail = stats.norm.sf((math.log(q) + sigma**2 / 2) / sigma)
    assert tail == pytest.approx(1e-7, rel=1e-6)
    with pytest.raises(InvalidParameterError):
        fading_upper_quantile(RAYLEIGH, 1.0)


def test_hata_exponent():
    assert hata_exponent(30) == pytest.approx(3.5225, abs=1e-4)
    assert hata_exponent(10) == pytest.approx(3.835, abs=1e-12)
    h = 10 ** ((44.9 - 35) / 6.55)
    assert h == pytest.approx(32.48, abs=0.01)
    assert hata_exponent(h) == pytest.approx(3.5, abs=1e-12)
    with pytest.raises(InvalidParameterError):
        hata_exponent(0)


def test_dbm_conversions():
    assert dbm_to_mw(0) == 1.0
    assert dbm_to_mw(10) == pytest.approx(10.0)
    assert dbm_to_mw(-137) == pytest.approx(1.9953e-14, rel=1e-4)
    assert mw_to_dbm(dbm_to_mw(-124.5)) == pytest.approx(-124.5)
    with pytest.raises(InvalidParameterError):
        mw_to_dbm(0)


def test_parse_fading():
    assert parse_fading("Rayleigh") == RAYLEIGH
    assert parse_fading(" none ") == NO_FADING
    assert parse_fading("lognormal").sigma_db == 2.0
    assert parse_fading("lognormal", 3.0).label == "lognormal(3dB)"
    assert parse_fading("rayleigh", 3.0).sigma_db == 0.0
    with pytest.raises(InvalidParameterError):
        parse_fading("rician")
    with pytest.raises(InvalidParameterError):
        parse_fading("lognormal", 0.0)
    assert LOGNORMAL_2DB.sigma == pytest.approx(0.46052, abs=1e-5)
