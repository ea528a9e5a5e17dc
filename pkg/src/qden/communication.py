"""Quantum-state transport timing.

Two short/long-range transport mechanisms are costed: repeated SWAP
gates between adjacent dots (time linear in hop count, per-hop time
inversely proportional to the exchange strength) and shuttling of the
confining potential, whose speed is bounded by adiabatic motion
``m v^2 << delta_c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import QdenError
from .technology import TechNode
from .timing import DEFAULT_TUNNEL_MODEL, TunnelModel
from .units import ELECTRON_MASS_KG, EV_TO_J

# Transverse effective mass of the silicon conduction-band valleys.
SI_TRANSVERSE_MASS_KG = 0.19 * ELECTRON_MASS_KG

# Reference chain: 1 um spanned across 40 nm dots in 71.2 ns, so one
# SWAP hop takes 2.848 ns at the reference pitch.
REF_SWAP_PITCH_NM = 40.0
DEFAULT_TAU_REF_S = 2.848e-9


@dataclass(frozen=True)
class CommParams:
    """Transport parameters; ``delta_c_ev`` is required for shuttle ops."""

    m_eff_kg: float = SI_TRANSVERSE_MASS_KG
    delta_c_ev: float | None = None   # confinement energy scale
    safety: float = 0.1               # margin operationalizing "much less than"
    tau_ref_s: float = DEFAULT_TAU_REF_S

    def __post_init__(self) -> None:
        if self.m_eff_kg <= 0:
            raise QdenError("effective mass must be positive")
        if self.delta_c_ev is not None and self.delta_c_ev <= 0:
            raise QdenError("confinement energy must be positive")
        if not 0 < self.safety <= 1:
            raise QdenError(f"safety margin must lie in (0, 1], got {self.safety}")
        if self.tau_ref_s <= 0:
            raise QdenError("reference SWAP time must be positive")


def swap_chain_time(distance_nm: float, node: TechNode,
                    params: CommParams = CommParams(),
                    model: TunnelModel = DEFAULT_TUNNEL_MODEL) -> float:
    """Time to move a state ``distance_nm`` by nearest-neighbour SWAPs.

    Hop count is ``ceil(distance / delta_g)``.  The per-hop time scales
    with the inverse exchange-strength ratio between the node pitch and
    the 40 nm reference, i.e. ``(coupling(40) / coupling(delta_g))^2``;
    the splitting cancels in the ratio, so the reference hop time is
    exact at the reference pitch for any model parameters.
    """
    if distance_nm < 0:
        raise QdenError(f"distance must be non-negative, got {distance_nm}")
    if distance_nm == 0:
        return 0.0
    hops = math.ceil(distance_nm / node.delta_g)
    exchange_ratio = (model.coupling(REF_SWAP_PITCH_NM) / model.coupling(node.delta_g)) ** 2
    return hops * params.tau_ref_s * exchange_ratio


def shuttle_speed_bound(params: CommParams) -> float:
    """Adiabatic speed limit for a shuttled qubit, m/s."""
    if params.delta_c_ev is None:
        raise QdenError("shuttle speed bound requires the confinement energy delta_c")
    return params.safety * math.sqrt(params.delta_c_ev * EV_TO_J / params.m_eff_kg)


def shuttle_time(distance_m: float, params: CommParams) -> float:
    """Time to shuttle a qubit ``distance_m`` at the speed bound, seconds."""
    if distance_m < 0:
        raise QdenError(f"distance must be non-negative, got {distance_m}")
    if distance_m == 0:
        return 0.0
    return distance_m / shuttle_speed_bound(params)
