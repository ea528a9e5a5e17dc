"""Cryogenic control-electronics budgets.

Converter energy efficiency is quantified by the Walden figure of merit
(J per conversion-step, low-resolution ADCs) and the Schreier figure of
merit (dB, thermal-noise-limited ADCs).  The channel budget divides the
refrigerator cooling power by the per-channel dissipation and applies a
multiplexing factor to get the addressable qubit count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import QdenError

# State-of-the-art room-temperature converters.
FOMW_STATE_OF_THE_ART_J = 5e-15
FOMS_STATE_OF_THE_ART_DB = 175.0
# Cryogenic converters published to date sit around 1 pJ/step, a 200x gap.
FOMW_CRYO_TYPICAL_J = 1e-12


@dataclass(frozen=True)
class AdcSpec:
    power_w: float
    sample_rate_sps: float
    bits: float  # effective number of bits

    def __post_init__(self) -> None:
        if self.power_w <= 0 or self.sample_rate_sps <= 0:
            raise QdenError("power and sample rate must be positive")
        if self.bits < 1:
            raise QdenError(f"effective bits must be >= 1, got {self.bits}")


@dataclass(frozen=True)
class PowerBudget:
    cooling_power_w: float
    per_channel_power_w: float
    mux_factor: float  # combined TDMA/FDMA/SDMA factor

    def __post_init__(self) -> None:
        if self.cooling_power_w <= 0 or self.per_channel_power_w <= 0:
            raise QdenError("powers must be positive")
        if self.mux_factor < 1:
            raise QdenError(f"multiplexing factor must be >= 1, got {self.mux_factor}")


def fom_walden(spec: AdcSpec) -> float:
    """Energy per conversion-step, J: ``P / (f_s * 2^N)``."""
    return spec.power_w / (spec.sample_rate_sps * 2.0 ** spec.bits)


def fom_schreier(spec: AdcSpec) -> float:
    """Schreier figure of merit, dB: ``10 log10(2^N f_s / (2 P))``."""
    return 10.0 * math.log10(2.0 ** spec.bits * spec.sample_rate_sps / (2.0 * spec.power_w))


def dac_power(sample_rate_sps: float, energy_per_conversion_j: float) -> float:
    """Waveform-generation power, W.

    DAC efficiency is quoted per conversion (no ``2^N`` term), so power
    is just rate times energy; a zero rate costs nothing.
    """
    if sample_rate_sps < 0 or energy_per_conversion_j <= 0:
        raise QdenError("sample rate must be non-negative and energy positive")
    return sample_rate_sps * energy_per_conversion_j


def channel_budget(budget: PowerBudget) -> tuple[int, int]:
    """(max concurrent channels, max addressable qubits).

    Hardware channels are integral, so both counts use floor division.
    """
    max_channels = math.floor(budget.cooling_power_w / budget.per_channel_power_w)
    max_qubits = math.floor(max_channels * budget.mux_factor)
    return max_channels, max_qubits
