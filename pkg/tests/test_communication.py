import math
import random

import pytest

from qden.communication import (
    CommParams,
    DEFAULT_TAU_REF_S,
    REF_SWAP_PITCH_NM,
    SI_TRANSVERSE_MASS_KG,
    shuttle_speed_bound,
    shuttle_time,
    swap_chain_time,
)
from qden.errors import QdenError
from qden.timing import TunnelModel
from qden.units import ELECTRON_MASS_KG, EV_TO_J


def test_reference_chain_time(nodes_by_name):
    # 25 hops of 2.848 ns across a 1 um span at the 40 nm pitch.
    assert swap_chain_time(1000, nodes_by_name["14nm"]) == 7.12e-8


def test_reference_chain_is_self_calibrating(nodes_by_name):
    # At the reference pitch the exchange ratio cancels, so any model
    # parameters reproduce the anchor exactly.
    rng = random.Random(5)
    node = nodes_by_name["14nm"]
    for _ in range(20):
        model = TunnelModel(t0_ev=rng.uniform(1e-5, 1e-1),
                            decay_nm=rng.uniform(1.0, 100.0))
        assert swap_chain_time(1000, node, model=model) == 7.12e-8


def test_chain_time_zero_and_negative(nodes_by_name):
    node = nodes_by_name["14nm"]
    assert swap_chain_time(0, node) == 0.0
    with pytest.raises(QdenError):
        swap_chain_time(-1.0, node)


def test_chain_time_linearity_at_hop_multiples(nodes_by_name):
    node = nodes_by_name["14nm"]
    assert swap_chain_time(2000, node) == 2 * swap_chain_time(1000, node)
    rng = random.Random(13)
    for _ in range(200):
        hops = rng.randint(1, 10_000)
        got = swap_chain_time(hops * 40, node)
        assert math.isclose(got, hops * DEFAULT_TAU_REF_S, rel_tol=1e-12)


def test_chain_time_ceils_partial_hops(nodes_by_name):
    node = nodes_by_name["14nm"]
    assert swap_chain_time(1, node) == swap_chain_time(40, node)
    assert swap_chain_time(40.5, node) == swap_chain_time(80, node)


def test_chain_time_monotone_in_distance(nodes_by_name):
    node = nodes_by_name["10nm"]
    rng = random.Random(17)
    distances = sorted(rng.uniform(0, 1e5) for _ in range(300))
    times = [swap_chain_time(d, node, model=TunnelModel()) for d in distances]
    for earlier, later in zip(times, times[1:]):
        assert earlier <= later


def test_per_hop_time_scales_with_inverse_exchange(nodes_by_name):
    # Pitch 30 nm: coupling ratio e, exchange ratio e^2, 34 hops per um.
    node = nodes_by_name["10nm"]
    expected = 34 * DEFAULT_TAU_REF_S * math.exp(-2 * (REF_SWAP_PITCH_NM - 30) / 10)
    assert math.isclose(swap_chain_time(1000, node), expected, rel_tol=1e-12)


def test_shuttle_speed_bound_anchor():
    params = CommParams(delta_c_ev=0.3e-3, safety=1.0)
    expected = math.sqrt(0.3e-3 * EV_TO_J / (0.19 * ELECTRON_MASS_KG))
    got = shuttle_speed_bound(params)
    assert got == expected
    assert math.isclose(got, 1.666e4, rel_tol=1e-3)


def test_shuttle_speed_bound_scales():
    base = shuttle_speed_bound(CommParams(delta_c_ev=0.3e-3, safety=1.0))
    tenth = shuttle_speed_bound(CommParams(delta_c_ev=0.3e-3, safety=0.1))
    assert math.isclose(tenth, base / 10, rel_tol=1e-12)
    quadrupled = shuttle_speed_bound(CommParams(delta_c_ev=1.2e-3, safety=1.0))
    assert quadrupled == 2 * base


def test_shuttle_time_is_distance_over_bound():
    params = CommParams(delta_c_ev=0.3e-3, safety=0.1)
    bound = shuttle_speed_bound(params)
    assert shuttle_time(100e-6, params) == 100e-6 / bound
    assert shuttle_time(0.0, params) == 0.0
    assert shuttle_time(2e-4, params) == 2 * shuttle_time(1e-4, params)
    with pytest.raises(QdenError):
        shuttle_time(-1e-6, params)


def test_shuttle_requires_confinement_energy():
    with pytest.raises(QdenError, match="delta_c"):
        shuttle_speed_bound(CommParams())


def test_params_validation():
    assert CommParams().m_eff_kg == SI_TRANSVERSE_MASS_KG
    assert CommParams().safety == 0.1
    with pytest.raises(QdenError):
        CommParams(safety=0.0)
    with pytest.raises(QdenError):
        CommParams(safety=1.5)
    with pytest.raises(QdenError):
        CommParams(m_eff_kg=0.0)
    with pytest.raises(QdenError):
        CommParams(delta_c_ev=-1e-3)
    with pytest.raises(QdenError):
        CommParams(tau_ref_s=0.0)
