"""Operation-time constraints for the exchange-driven double-dot qubit.

Gate speed is set by the effective exchange interaction
``J = t^2 / delta_e_st``; the tunnel coupling ``t`` falls off
exponentially with the inter-dot distance, which equals the gate pitch
of the node.  Three requirements bound the usable operation time:

* adiabaticity  -- ``t < delta_e_st / 2``, hence ``T_op > 4 hbar / delta_e_st``
* coherence     -- ``T_op / T2* < eta`` (eta = error threshold of the code)
* gate duration -- a pi/8 rotation takes ``3.598 hbar / J``

The feasibility window per node is the interval between the larger of
the two lower bounds and the coherence upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import QdenError
from .technology import TechNode
from .units import HBAR_EV_S, round_sig

PI8_GATE_FACTOR = 3.598

# Intrinsic variability of top-down fabrication bounds feature pitches
# at about 3 nm; smaller nodes are rejected rather than extrapolated.
MIN_MANUFACTURABLE_PITCH_NM = 3.0

# Default tunnel-model calibration: 119.2 ueV at a 40 nm pitch gives a
# ~100 ps pi/8 gate at a 0.6 meV singlet-triplet splitting.  The decay
# length is a modeling choice; both knobs are exposed.
REF_COUPLING_EV = 119.2e-6
REF_PITCH_NM = 40.0
DEFAULT_DECAY_NM = 10.0
DEFAULT_T0_EV = REF_COUPLING_EV * math.exp(REF_PITCH_NM / DEFAULT_DECAY_NM)

BINDING_ADIABATIC = "adiabatic"
BINDING_NODE_GATE_TIME = "node_gate_time"


def j_max(t_coupling_ev: float, delta_e_st_ev: float) -> float:
    """Maximum effective exchange interaction, eV."""
    if t_coupling_ev <= 0 or delta_e_st_ev <= 0:
        raise QdenError("tunnel coupling and singlet-triplet splitting must be positive")
    return t_coupling_ev * t_coupling_ev / delta_e_st_ev

def t_pi8(j_ev: float) -> float:
    """Duration of a pi/8 rotation at exchange strength ``j_ev``, seconds."""
    if j_ev <= 0:
        raise QdenError(f"exchange strength must be positive, got {j_ev}")
    return PI8_GATE_FACTOR * HBAR_EV_S / j_ev


def adiabatic_min_time(delta_e_st_ev: float) -> float:
    """Shortest adiabatic operation time, seconds."""
    if delta_e_st_ev <= 0:
        raise QdenError(f"singlet-triplet splitting must be positive, got {delta_e_st_ev}")
    return 4 * HBAR_EV_S / delta_e_st_ev


def coherence_max_time(eta: float, t2_star_s: float) -> float:
    """Longest operation compatible with the error threshold, seconds."""
    if not 0 < eta < 1:
        raise QdenError(f"error threshold must lie in (0, 1), got {eta}")
    if t2_star_s <= 0:
        raise QdenError(f"dephasing time must be positive, got {t2_star_s}")
    return eta * t2_star_s


@dataclass(frozen=True)
class TunnelModel:
    """Exponential pitch dependence of the tunnel coupling.

    ``coupling(pitch) = t0 * exp(-pitch / decay_nm)``.  The default is
    calibrated so the coupling is 119.2 ueV at a 40 nm pitch.
    """

    t0_ev: float = DEFAULT_T0_EV
    decay_nm: float = DEFAULT_DECAY_NM

    def __post_init__(self) -> None:
        if self.t0_ev <= 0 or self.decay_nm <= 0:
            raise QdenError("tunnel model parameters must be positive")

    def coupling(self, pitch_nm: float) -> float:
        if pitch_nm <= 0:
            raise QdenError(f"pitch must be positive, got {pitch_nm}")
        return self.t0_ev * math.exp(-pitch_nm / self.decay_nm)


DEFAULT_TUNNEL_MODEL = TunnelModel()


def tunnel_coupling(node: TechNode, t0_ev: float = DEFAULT_T0_EV,
                    decay_nm: float = DEFAULT_DECAY_NM) -> float:
    """Tunnel coupling at the node's gate pitch, eV (raw exponential)."""
    return TunnelModel(t0_ev=t0_ev, decay_nm=decay_nm).coupling(node.delta_g)


@dataclass(frozen=True)
class QubitPhysicsParams:
    """Physics inputs for the constraint solver.

    ``t_coupling_ev`` overrides the pitch model when given; otherwise
    the coupling comes from the tunnel model at the node's gate pitch.
    """

    delta_e_st_ev: float = 0.6e-3
    t2_star_s: float = 1e-6
    eta: float = 1e-3
    t_coupling_ev: float | None = None

    def __post_init__(self) -> None:
        if self.delta_e_st_ev <= 0:
            raise QdenError("singlet-triplet splitting must be positive")
        if self.t2_star_s <= 0:
            raise QdenError("dephasing time must be positive")
        if not 0 < self.eta < 1:
            raise QdenError(f"error threshold must lie in (0, 1), got {self.eta}")
        if self.t_coupling_ev is not None and self.t_coupling_ev <= 0:
            raise QdenError("tunnel coupling must be positive")


@dataclass(frozen=True)
class ConstraintWindow:
    """Feasible operation-time interval for one node."""

    node: TechNode
    t_min_s: float
    t_max_s: float
    feasible: bool
    binding_constraint_low: str
    t_coupling_ev: float  # effective (capped) coupling used for the gate bound

    def frequency_band_hz(self, digits: int = 3) -> tuple[float, float]:
        """Operating band (1/t_max, 1/t_min), endpoints at 3 sig. digits."""
        return round_sig(1.0 / self.t_max_s, digits), round_sig(1.0 / self.t_min_s, digits)


def feasibility_window(node: TechNode,
                       params: QubitPhysicsParams = QubitPhysicsParams(),
                       model: TunnelModel = DEFAULT_TUNNEL_MODEL) -> ConstraintWindow:
    """Solve the operation-time constraints for one node.

    The raw coupling is capped at ``delta_e_st / 2`` (adiabaticity bound
    on the coupling itself); the cap lives here so the tunnel model
    stays a pure exponential.

    Raises:
        QdenError: gate pitch below the 3 nm manufacturability limit.
    """
    if node.delta_g < MIN_MANUFACTURABLE_PITCH_NM:
        raise QdenError(
            f"node {node.name!r}: gate pitch {node.delta_g} nm is below the "
            f"{MIN_MANUFACTURABLE_PITCH_NM:g} nm manufacturability limit"
        )
    raw = params.t_coupling_ev if params.t_coupling_ev is not None \
        else model.coupling(node.delta_g)
    t_eff = min(raw, params.delta_e_st_ev / 2)
    gate = t_pi8(j_max(t_eff, params.delta_e_st_ev))
    adiabatic = adiabatic_min_time(params.delta_e_st_ev)
    if gate >= adiabatic:
        t_min, binding = gate, BINDING_NODE_GATE_TIME
    else:
        t_min, binding = adiabatic, BINDING_ADIABATIC
    t_max = coherence_max_time(params.eta, params.t2_star_s)
    return ConstraintWindow(
        node=node,
        t_min_s=t_min,
        t_max_s=t_max,
        feasible=t_min <= t_max,
        binding_constraint_low=binding,
        t_coupling_ev=t_eff,
    )
