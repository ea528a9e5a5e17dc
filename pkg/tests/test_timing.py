import math
import random

import pytest

from qden.errors import QdenError
from qden.technology import TechNode
from qden.timing import (
    BINDING_NODE_GATE_TIME,
    DEFAULT_DECAY_NM,
    DEFAULT_T0_EV,
    PI8_GATE_FACTOR,
    QubitPhysicsParams,
    TunnelModel,
    adiabatic_min_time,
    coherence_max_time,
    feasibility_window,
    j_max,
    t_pi8,
    tunnel_coupling,
)
from qden.units import HBAR_EV_S, round_sig


def test_j_max_values():
    assert math.isclose(j_max(50e-6, 0.3e-3), 8.3333333e-6, rel_tol=1e-7)
    assert math.isclose(j_max(119.2e-6, 0.6e-3), 23.681e-6, rel_tol=1e-4)
    # t == splitting collapses to the splitting itself
    assert math.isclose(j_max(0.4e-3, 0.4e-3), 0.4e-3, rel_tol=1e-12)
    with pytest.raises(QdenError):
        j_max(-1e-6, 0.3e-3)
    with pytest.raises(QdenError):
        j_max(1e-6, 0.0)


def test_pi8_gate_time_values():
    assert math.isclose(t_pi8(23.681e-6), 1.0000e-10, rel_tol=1e-3)
    assert math.isclose(t_pi8(8.3333333e-6), 2.8419e-10, rel_tol=1e-4)
    with pytest.raises(QdenError):
        t_pi8(0.0)


def test_pi8_gate_time_reciprocal_law():
    rng = random.Random(3)
    for _ in range(100):
        j = rng.uniform(1e-7, 1e-3)
        assert t_pi8(2 * j) == t_pi8(j) / 2


def test_adiabatic_bound_values():
    assert math.isclose(adiabatic_min_time(0.3e-3), 8.776159e-12, rel_tol=1e-6)
    assert math.isclose(adiabatic_min_time(1.2e-3), 2.194040e-12, rel_tol=1e-6)
    # quadrupling the splitting quarters the bound, exactly
    assert adiabatic_min_time(4 * 0.3e-3) == adiabatic_min_time(0.3e-3) / 4
    with pytest.raises(QdenError):
        adiabatic_min_time(0.0)


def test_coherence_bound_values():
    assert coherence_max_time(1e-2, 1e-6) == 1e-8
    assert coherence_max_time(1e-4, 1e-6) == 1e-10
    assert math.isclose(coherence_max_time(1 - 1e-12, 1e-6), 1e-6, rel_tol=1e-9)
    with pytest.raises(QdenError):
        coherence_max_time(0.0, 1e-6)
    with pytest.raises(QdenError):
        coherence_max_time(1.0, 1e-6)


def test_default_tunnel_calibration(nodes_by_name):
    # 119.2 ueV at the 40 nm pitch, decaying by e every 10 nm.
    node40 = nodes_by_name["14nm"]
    assert math.isclose(tunnel_coupling(node40), 119.2e-6, rel_tol=1e-12)
    node30 = nodes_by_name["10nm"]
    assert math.isclose(tunnel_coupling(node30), 119.2e-6 * math.e, rel_tol=1e-12)
    assert math.isclose(tunnel_coupling(node30), 324e-6, rel_tol=2e-3)


def test_tunnel_model_long_decay_limit(nodes_by_name):
    model = TunnelModel(t0_ev=1e-3, decay_nm=1e12)
    for node in nodes_by_name.values():
        assert math.isclose(model.coupling(node.delta_g), 1e-3, rel_tol=1e-9)
    with pytest.raises(QdenError):
        TunnelModel(t0_ev=-1.0)


def test_default_gate_time_anchor(nodes_by_name):
    # ~100 ps pi/8 gate at the 40 nm pitch with a 0.6 meV splitting.
    node = nodes_by_name["14nm"]
    gate = t_pi8(j_max(tunnel_coupling(node), 0.6e-3))
    assert math.isclose(gate, 1e-10, rel_tol=0.01)


def test_window_14nm_defaults(nodes_by_name):
    window = feasibility_window(nodes_by_name["14nm"])
    assert window.feasible
    assert window.binding_constraint_low == BINDING_NODE_GATE_TIME
    assert math.isclose(window.t_min_s, 1e-10, rel_tol=1e-3)
    assert window.t_max_s == 1e-9
    f_lo, f_hi = window.frequency_band_hz()
    assert (f_lo, f_hi) == (1e9, 1e10)
    assert 1e9 <= f_lo < f_hi <= 100e9


def test_window_marginal_at_steane_threshold(nodes_by_name):
    # eta = 1e-4 closes the window to a point at reporting precision.
    params = QubitPhysicsParams(eta=1e-4)
    window = feasibility_window(nodes_by_name["14nm"], params)
    assert math.isclose(window.t_min_s, window.t_max_s, rel_tol=1e-4)
    assert round_sig(window.t_min_s) == round_sig(window.t_max_s)


def test_window_coupling_cap(nodes_by_name):
    # At 30 and 26 nm pitch the raw coupling exceeds half the splitting,
    # so both nodes see the same capped coupling and the same gate time.
    w10 = feasibility_window(nodes_by_name["10nm"])
    w7 = feasibility_window(nodes_by_name["7nm"])
    assert w10.t_coupling_ev == w7.t_coupling_ev == 0.6e-3 / 2
    assert w10.t_min_s == w7.t_min_s
    cap_gate = PI8_GATE_FACTOR * 4 * HBAR_EV_S / 0.6e-3
    assert math.isclose(w10.t_min_s, cap_gate, rel_tol=1e-12)
    # Capped gate time exceeds the adiabatic bound: 14.392 > 4.
    assert w10.t_min_s > adiabatic_min_time(0.6e-3)
    assert w10.binding_constraint_low == BINDING_NODE_GATE_TIME


def test_window_explicit_coupling_overrides_model(nodes_by_name):
    params = QubitPhysicsParams(t_coupling_ev=50e-6)
    window = feasibility_window(nodes_by_name["65nm"], params)
    expected = t_pi8(j_max(50e-6, 0.6e-3))
    assert window.t_min_s == expected


def test_window_manufacturability_limit():
    node2 = TechNode("2nm", 2, 4, 2, 20, 4)
    with pytest.raises(QdenError, match="manufacturability"):
        feasibility_window(node2)
    node3 = TechNode("3nm", 3, 6, 3, 20, 6)
    assert feasibility_window(node3).t_min_s > 0


def test_window_min_time_monotone_in_pitch():
    rng = random.Random(11)
    params = QubitPhysicsParams(delta_e_st_ev=0.6e-3)
    cap_gate = PI8_GATE_FACTOR * 4 * HBAR_EV_S / 0.6e-3
    pitches = sorted(rng.randint(3, 200) for _ in range(50))
    t_mins = []
    for pitch in pitches:
        node = TechNode("n", pitch, 2 * pitch, pitch, 4 * pitch, 2 * pitch)
        t_mins.append(feasibility_window(node, params).t_min_s)
    for smaller, larger in zip(t_mins, t_mins[1:]):
        assert smaller <= larger
    assert all(t >= cap_gate * (1 - 1e-12) for t in t_mins)


def test_window_widens_with_eta_and_t2(nodes_by_name):
    node = nodes_by_name["14nm"]
    base = feasibility_window(node, QubitPhysicsParams(eta=1e-3, t2_star_s=1e-6))
    wider_eta = feasibility_window(node, QubitPhysicsParams(eta=1e-2, t2_star_s=1e-6))
    wider_t2 = feasibility_window(node, QubitPhysicsParams(eta=1e-3, t2_star_s=1e-5))
    assert wider_eta.t_max_s > base.t_max_s
    assert wider_t2.t_max_s > base.t_max_s
    assert wider_eta.t_min_s == wider_t2.t_min_s == base.t_min_s


def test_params_validation():
    with pytest.raises(QdenError):
        QubitPhysicsParams(delta_e_st_ev=0.0)
    with pytest.raises(QdenError):
        QubitPhysicsParams(eta=1.0)
    with pytest.raises(QdenError):
        QubitPhysicsParams(t2_star_s=-1e-6)
    with pytest.raises(QdenError):
        QubitPhysicsParams(t_coupling_ev=0.0)


def test_default_t0_matches_reference_coupling():
    assert math.isclose(DEFAULT_T0_EV, 119.2e-6 * math.exp(4.0), rel_tol=1e-12)
    assert math.isclose(DEFAULT_T0_EV, 6.508e-3, rel_tol=1e-4)
    assert DEFAULT_DECAY_NM == 10.0
