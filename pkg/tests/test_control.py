import math

import pytest

from qden.control import (
    AdcSpec,
    FOMS_STATE_OF_THE_ART_DB,
    FOMW_CRYO_TYPICAL_J,
    FOMW_STATE_OF_THE_ART_J,
    PowerBudget,
    channel_budget,
    dac_power,
    fom_schreier,
    fom_walden,
)
from qden.errors import QdenError

QPC_ADC = AdcSpec(power_w=0.2, sample_rate_sps=2e8, bits=10)


def test_walden_fom_reference_adc():
    # 10 bit, 200 MSa/s at 200 mW lands just under 1 pJ/step.
    got = fom_walden(QPC_ADC)
    assert got == 0.2 / (2e8 * 1024)
    assert 0.95e-12 <= got <= 1.0e-12


def test_walden_fom_linearity():
    doubled = AdcSpec(power_w=0.4, sample_rate_sps=2e8, bits=10)
    assert fom_walden(doubled) == 2 * fom_walden(QPC_ADC)


def test_walden_state_of_the_art_inversion():
    # P = FOMw * f_s * 2^N at the 5 fJ/step reference point.
    power = FOMW_STATE_OF_THE_ART_J * 2e8 * 2**10
    assert math.isclose(power, 1.024e-3, rel_tol=1e-12)
    spec = AdcSpec(power_w=power, sample_rate_sps=2e8, bits=10)
    assert math.isclose(fom_walden(spec), FOMW_STATE_OF_THE_ART_J, rel_tol=1e-12)


def test_cryo_efficiency_gap_is_200x():
    assert FOMW_CRYO_TYPICAL_J / FOMW_STATE_OF_THE_ART_J == 200.0


def test_schreier_fom_reference_point():
    spec = AdcSpec(power_w=3.24e-7, sample_rate_sps=2e8, bits=10)
    assert abs(fom_schreier(spec) - FOMS_STATE_OF_THE_ART_DB) < 0.01
    # exact inversion of the formula
    power = 2**10 * 2e8 / (2 * 10**17.5)
    exact = AdcSpec(power_w=power, sample_rate_sps=2e8, bits=10)
    assert math.isclose(fom_schreier(exact), 175.0, rel_tol=1e-12)


def test_schreier_gains_3dB_per_power_halving():
    half = AdcSpec(power_w=0.1, sample_rate_sps=2e8, bits=10)
    gain = fom_schreier(half) - fom_schreier(QPC_ADC)
    assert math.isclose(gain, 10 * math.log10(2), rel_tol=1e-9)


def test_dac_power_values():
    assert dac_power(1e9, 30e-12) == 30e-3
    assert dac_power(0.0, 30e-12) == 0.0
    assert math.isclose(dac_power(2e8, 30e-12), 6e-3, rel_tol=1e-12)
    with pytest.raises(QdenError):
        dac_power(1e9, 0.0)


def test_channel_budget_reference_loop():
    channels, qubits = channel_budget(PowerBudget(1.0, 1e-3, 1))
    assert (channels, qubits) == (1000, 1000)
    channels, qubits = channel_budget(PowerBudget(1.0, 1e-3, 10))
    assert (channels, qubits) == (1000, 10_000)


def test_channel_budget_floor_boundary():
    channels, qubits = channel_budget(PowerBudget(1e-3, 1e-3, 1))
    assert (channels, qubits) == (1, 1)
    channels, _ = channel_budget(PowerBudget(1.999e-3, 1e-3, 1))
    assert channels == 1


def test_channel_budget_monotone():
    base = channel_budget(PowerBudget(1.0, 1e-3, 10))
    more_cooling = channel_budget(PowerBudget(2.0, 1e-3, 10))
    more_mux = channel_budget(PowerBudget(1.0, 1e-3, 20))
    assert more_cooling[1] >= base[1]
    assert more_mux[1] >= base[1]


def test_spec_validation():
    with pytest.raises(QdenError):
        AdcSpec(power_w=0.0, sample_rate_sps=2e8, bits=10)
    with pytest.raises(QdenError):
        AdcSpec(power_w=0.2, sample_rate_sps=2e8, bits=0.5)
    with pytest.raises(QdenError):
        PowerBudget(1.0, 1e-3, 0.5)
    with pytest.raises(QdenError):
        PowerBudget(0.0, 1e-3, 1)
