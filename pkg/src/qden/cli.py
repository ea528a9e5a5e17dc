"""Command-line front end.

Every estimator module is exposed as a subcommand producing a report
envelope; ``--format`` selects a human table, a CSV results table or the
full JSON envelope.  Sweep modes iterate the built-in nodes and can
render a figure of the series next to the delimited output.  Exit codes:
0 success, 1 internal fault, 2 usage or input error.
"""

from __future__ import annotations

import functools
import math
import os
import sys
import warnings as _warnings
from contextlib import contextmanager

import click

from . import communication, control, layout, shor, technology, timing
from .codes import BlockConvention, CodeKind, CodeSpec, density
from .errors import QdenError
from .report import ReportEnvelope, render
from .units import NM2_PER_UM2

ENV_NODES = "QDEN_NODES"

_CODE_NAMES = {
    "steane": CodeKind.STEANE,
    "concat": CodeKind.CONCATENATED,
    "surface": CodeKind.SURFACE,
}
_CONVENTIONS = {
    "quarter": BlockConvention.QUARTER_BLOCK,
    "full": BlockConvention.FULL_BLOCK,
}


def format_option(fn):
    return click.option(
        "--format", "fmt", type=click.Choice(["table", "csv", "json"]),
        default="table", show_default=True, help="Output format.",
    )(fn)


def custom_option(fn):
    return click.option(
        "--custom", "custom_path", type=click.Path(), default=None,
        help=f"Custom-node CSV file (defaults to ${ENV_NODES} when set).",
    )(fn)


def handle_domain_errors(fn):
    """Map domain and file errors to exit code 2 with a one-line message."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (QdenError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


@contextmanager
def collect_warnings(bucket: list[str]):
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        yield
    bucket.extend(str(w.message) for w in caught)


def _resolve_custom(explicit: str | None) -> str | None:
    return explicit if explicit is not None else os.environ.get(ENV_NODES) or None


def _pick_nodes(node_name: str, custom_path: str | None,
                bucket: list[str]) -> list[technology.TechNode]:
    with collect_warnings(bucket):
        registry = technology.node_registry(_resolve_custom(custom_path))
    if node_name == "all":
        return list(registry.values())
    if node_name not in registry:
        known = ", ".join(registry)
        raise QdenError(f"unknown node {node_name!r} (known: {known})")
    return [registry[node_name]]


def _emit(envelope: ReportEnvelope, fmt: str,
          plot_path: str | None = None, plot_renderer=None) -> None:
    output = render(envelope, fmt)
    click.echo(output, nl=not output.endswith("\n"))
    if fmt != "table":
        for message in envelope.warnings:
            click.echo(f"warning: {message}", err=True)
    if plot_path is not None and plot_renderer is not None:
        from . import figures  # matplotlib import deferred to first use

        renderer = getattr(figures, plot_renderer)
        click.echo(f"figure written to {renderer(envelope.results, plot_path)}", err=True)


@click.group()
@click.version_option(package_name="qden")
def cli() -> None:
    """Resource estimator for CMOS silicon quantum architectures."""


# ---------------------------------------------------------------------------
# nodes
# ---------------------------------------------------------------------------


@cli.group()
def nodes() -> None:
    """Technology-node registry."""


@nodes.command("list")
@custom_option
@format_option
@handle_domain_errors
def nodes_list(custom_path: str | None, fmt: str) -> None:
    """List the built-in nodes, merged with any custom-node file."""
    warns: list[str] = []
    custom = _resolve_custom(custom_path)
    with collect_warnings(warns):
        registry = technology.node_registry(custom)
    rows = [node.as_record() for node in registry.values()]
    envelope = ReportEnvelope("nodes list", {"custom": custom or ""}, rows, warns)
    _emit(envelope, fmt)


# ---------------------------------------------------------------------------
# layout
# ---------------------------------------------------------------------------


def _layout_row(node: technology.TechNode) -> dict[str, object]:
    rep = layout.layout_report(node)
    return {
        "node": node.name,
        "delta_g_nm": node.delta_g,
        "x_d_nm": rep.x_d, "y_d_nm": rep.y_d,
        "x_c_nm": rep.x_c, "y_c_nm": rep.y_c,
        "x_t_nm": rep.x_t, "y_t_nm": rep.y_t,
        "x_qb_nm": rep.x_qb, "y_qb_nm": rep.y_qb,
        "x_qbyte_nm": rep.x_qbyte, "y_qbyte_nm": rep.y_qbyte,
        "a_d_um2": rep.a_d / NM2_PER_UM2,
        "a_qb_um2": rep.a_qb / NM2_PER_UM2,
        "a_qbyte_um2": rep.a_qbyte / NM2_PER_UM2,
        "delta_qi_mqb_per_cm2": rep.delta_qi / 1e6,
    }


@cli.command("layout")
@click.option("--node", "node_name", required=True,
              help="Node name, or 'all' for every registry node.")
@custom_option
@format_option
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Render the sweep as a figure file (requires --node all).")
@handle_domain_errors
def layout_cmd(node_name: str, custom_path: str | None, fmt: str,
               plot_path: str | None) -> None:
    """Module, logical-qubit and qubyte geometry plus information density."""
    if plot_path is not None and node_name != "all":
        raise click.UsageError("--plot requires --node all")
    warns: list[str] = []
    rows = [_layout_row(node) for node in _pick_nodes(node_name, custom_path, warns)]
    envelope = ReportEnvelope(
        "layout",
        {"node": node_name, "custom": _resolve_custom(custom_path) or ""},
        rows, warns,
    )
    _emit(envelope, fmt, plot_path, "save_layout_figure")


# ---------------------------------------------------------------------------
# density
# ---------------------------------------------------------------------------


@cli.command("density")
@click.option("--code", "code_name", type=click.Choice(sorted(_CODE_NAMES)),
              required=True, help="Code family.")
@click.option("--d", "distance", type=int, default=None, help="Surface-code distance.")
@click.option("--convention", type=click.Choice(sorted(_CONVENTIONS)),
              default="quarter", show_default=True,
              help="Per-physical-qubit area convention (surface code).")
@click.option("--node", "node_name", default=None, help="Node name.")
@click.option("--sweep", is_flag=True, help="Iterate all registry nodes.")
@custom_option
@format_option
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Render the sweep as a figure file (requires --sweep).")
@handle_domain_errors
def density_cmd(code_name: str, distance: int | None, convention: str,
                node_name: str | None, sweep: bool, custom_path: str | None,
                fmt: str, plot_path: str | None) -> None:
    """Logical-qubit density per cm^2 for a code on one or all nodes."""
    if plot_path is not None and not sweep:
        raise click.UsageError("--plot requires --sweep")
    if not sweep and node_name is None:
        raise click.UsageError("provide --node NAME or --sweep")
    kind = _CODE_NAMES[code_name]
    spec = CodeSpec(kind=kind, distance=distance)
    conv = _CONVENTIONS[convention]
    warns: list[str] = []
    nodes_ = _pick_nodes("all" if sweep else node_name, custom_path, warns)
    rows = [
        {
            "node": node.name,
            "delta_g_nm": node.delta_g,
            "code": kind.value,
            "distance": distance,
            "convention": conv.value if kind is CodeKind.SURFACE else None,
            "density_mqb_per_cm2": density(spec, node, conv) / 1e6,
        }
        for node in nodes_
    ]
    envelope = ReportEnvelope(
        "density",
        {"code": code_name, "d": distance, "convention": convention,
         "node": node_name or "", "sweep": sweep},
        rows, warns,
    )
    _emit(envelope, fmt, plot_path, "save_density_figure")


# ---------------------------------------------------------------------------
# window
# ---------------------------------------------------------------------------


@cli.command("window")
@click.option("--node", "node_name", default=None, help="Node name.")
@click.option("--dest", "delta_e_st_mev", type=float, default=0.6, show_default=True,
              help="Singlet-triplet splitting, meV.")
@click.option("--eta", type=float, default=1e-3, show_default=True,
              help="Error threshold of the target code.")
@click.option("--t2", "t2_star_s", type=float, default=1e-6, show_default=True,
              help="Dephasing time, seconds.")
@click.option("--t0", "t0_ev", type=float, default=None,
              help="Tunnel-model prefactor, eV.")
@click.option("--lambda", "decay_nm", type=float, default=None,
              help="Tunnel-model decay length, nm.")
@click.option("--sweep", is_flag=True, help="Iterate all registry nodes.")
@custom_option
@format_option
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Render the sweep as a figure file (requires --sweep).")
@handle_domain_errors
def window_cmd(node_name: str | None, delta_e_st_mev: float, eta: float,
               t2_star_s: float, t0_ev: float | None, decay_nm: float | None,
               sweep: bool, custom_path: str | None, fmt: str,
               plot_path: str | None) -> None:
    """Feasible operation-time window and frequency band per node."""
    if plot_path is not None and not sweep:
        raise click.UsageError("--plot requires --sweep")
    if not sweep and node_name is None:
        raise click.UsageError("provide --node NAME or --sweep")
    model = timing.TunnelModel(
        t0_ev=t0_ev if t0_ev is not None else timing.DEFAULT_T0_EV,
        decay_nm=decay_nm if decay_nm is not None else timing.DEFAULT_DECAY_NM,
    )
    params = timing.QubitPhysicsParams(
        delta_e_st_ev=delta_e_st_mev * 1e-3, eta=eta, t2_star_s=t2_star_s,
    )
    warns: list[str] = []
    nodes_ = _pick_nodes("all" if sweep else node_name, custom_path, warns)
    rows = []
    for node in nodes_:
        window = timing.feasibility_window(node, params, model)
        f_lo, f_hi = window.frequency_band_hz()
        rows.append({
            "node": node.name,
            "delta_g_nm": node.delta_g,
            "t_coupling_ev": window.t_coupling_ev,
            "t_min_s": window.t_min_s,
            "t_max_s": window.t_max_s,
            "feasible": window.feasible,
            "binding_constraint": window.binding_constraint_low,
            "f_lo_ghz": f_lo / 1e9 if window.feasible else None,
            "f_hi_ghz": f_hi / 1e9 if window.feasible else None,
        })
    envelope = ReportEnvelope(
        "window",
        {"node": node_name or "", "dest_mev": delta_e_st_mev, "eta": eta,
         "t2_s": t2_star_s, "t0_ev": model.t0_ev, "lambda_nm": model.decay_nm,
         "sweep": sweep},
        rows, warns,
    )
    _emit(envelope, fmt, plot_path, "save_window_figure")


# ---------------------------------------------------------------------------
# shor
# ---------------------------------------------------------------------------


@cli.command("shor")
@click.option("--bits", "bits_arg", required=True,
              help="Problem size in bits, or 'all' for every tabulated size.")
@click.option("--node", "node_name", required=True,
              help="Node name, or 'all' for every registry node.")
@click.option("--d", "distance", type=int, default=None,
              help="Explicit code distance (for non-tabulated sizes).")
@click.option("--nphys", "n_physical", type=int, default=None,
              help="Explicit physical-qubit count (for non-tabulated sizes).")
@click.option("--convention", type=click.Choice(sorted(_CONVENTIONS)),
              default="quarter", show_default=True)
@custom_option
@format_option
@handle_domain_errors
def shor_cmd(bits_arg: str, node_name: str, distance: int | None,
             n_physical: int | None, convention: str, custom_path: str | None,
             fmt: str) -> None:
    """Chip area and runtime for factoring problems."""
    conv = _CONVENTIONS[convention]
    if bits_arg == "all":
        sizes = [row.n_bits for row in shor.shor_dataset()]
        if distance is not None or n_physical is not None:
            raise click.UsageError("--d/--nphys cannot be combined with --bits all")
    else:
        try:
            sizes = [int(bits_arg)]
        except ValueError:
            raise click.UsageError(f"--bits must be an integer or 'all', got {bits_arg!r}")
    warns: list[str] = []
    nodes_ = _pick_nodes(node_name, custom_path, warns)
    rows = []
    for n_bits in sizes:
        for node in nodes_:
            est = shor.shor_estimate(n_bits, node, distance=distance,
                                     n_physical=n_physical, convention=conv)
            rows.append({
                "n_bits": est.row.n_bits,
                "data_qubits": est.row.data_qubits,
                "distance": est.row.distance,
                "n_physical": est.row.n_physical,
                "node": node.name,
                "delta_g_nm": node.delta_g,
                "area_mm2": est.area_mm2,
                "runtime_h": est.runtime_h,
                "t_cycle_s": est.t_cycle_s,
            })
    envelope = ReportEnvelope(
        "shor",
        {"bits": bits_arg, "node": node_name, "d": distance,
         "nphys": n_physical, "convention": convention},
        rows, warns,
    )
    _emit(envelope, fmt)


# ---------------------------------------------------------------------------
# comm
# ---------------------------------------------------------------------------


@cli.group()
def comm() -> None:
    """Quantum-communication timing."""


@comm.command("swap")
@click.option("--distance", "distance_nm", type=float, required=True,
              help="Transfer distance, nm.")
@click.option("--node", "node_name", required=True, help="Node name.")
@click.option("--t0", "t0_ev", type=float, default=None,
              help="Tunnel-model prefactor, eV.")
@click.option("--lambda", "decay_nm", type=float, default=None,
              help="Tunnel-model decay length, nm.")
@custom_option
@format_option
@handle_domain_errors
def comm_swap(distance_nm: float, node_name: str, t0_ev: float | None,
              decay_nm: float | None, custom_path: str | None, fmt: str) -> None:
    """SWAP-chain transfer time across a distance."""
    model = timing.TunnelModel(
        t0_ev=t0_ev if t0_ev is not None else timing.DEFAULT_T0_EV,
        decay_nm=decay_nm if decay_nm is not None else timing.DEFAULT_DECAY_NM,
    )
    warns: list[str] = []
    node = _pick_nodes(node_name, custom_path, warns)[0]
    params = communication.CommParams()
    total = communication.swap_chain_time(distance_nm, node, params, model)
    hops = math.ceil(distance_nm / node.delta_g) if distance_nm > 0 else 0
    rows = [{
        "node": node.name,
        "delta_g_nm": node.delta_g,
        "distance_nm": distance_nm,
        "hops": hops,
        "per_hop_s": total / hops if hops else 0.0,
        "total_s": total,
    }]
    envelope = ReportEnvelope(
        "comm swap",
        {"distance_nm": distance_nm, "node": node_name,
         "t0_ev": model.t0_ev, "lambda_nm": model.decay_nm},
        rows, warns,
    )
    _emit(envelope, fmt)


@comm.command("shuttle")
@click.option("--distance", "distance_m", type=float, required=True,
              help="Transfer distance, metres.")
@click.option("--deltac", "delta_c_mev", type=float, required=True,
              help="Confinement energy scale, meV.")
@click.option("--safety", type=float, default=0.1, show_default=True,
              help="Adiabaticity margin in (0, 1].")
@click.option("--meff", "m_eff_kg", type=float, default=None,
              help="Effective mass, kg (default: Si transverse mass).")
@format_option
@handle_domain_errors
def comm_shuttle(distance_m: float, delta_c_mev: float, safety: float,
                 m_eff_kg: float | None, fmt: str) -> None:
    """Qubit-shuttle speed bound and transfer time."""
    params = communication.CommParams(
        m_eff_kg=m_eff_kg if m_eff_kg is not None else communication.SI_TRANSVERSE_MASS_KG,
        delta_c_ev=delta_c_mev * 1e-3,
        safety=safety,
    )
    bound = communication.shuttle_speed_bound(params)
    rows = [{
        "distance_m": distance_m,
        "delta_c_mev": delta_c_mev,
        "m_eff_kg": params.m_eff_kg,
        "safety": safety,
        "speed_bound_m_per_s": bound,
        "time_s": communication.shuttle_time(distance_m, params),
    }]
    envelope = ReportEnvelope(
        "comm shuttle",
        {"distance_m": distance_m, "deltac_mev": delta_c_mev,
         "safety": safety, "meff_kg": params.m_eff_kg},
        rows,
    )
    _emit(envelope, fmt)


# ---------------------------------------------------------------------------
# control
# ---------------------------------------------------------------------------


@cli.group("control")
def control_grp() -> None:
    """Cryogenic control-electronics budgets."""


@control_grp.command("budget")
@click.option("--cooling", "cooling_w", type=float, required=True,
              help="Cooling power at the electronics stage, W.")
@click.option("--per-channel", "per_channel_w", type=float, required=True,
              help="Dissipation per qubit channel, W.")
@click.option("--mux", "mux_factor", type=float, required=True,
              help="Combined multiplexing factor (>= 1).")
@format_option
@handle_domain_errors
def control_budget(cooling_w: float, per_channel_w: float, mux_factor: float,
                   fmt: str) -> None:
    """Concurrent channel and addressable qubit counts."""
    budget = control.PowerBudget(
        cooling_power_w=cooling_w,
        per_channel_power_w=per_channel_w,
        mux_factor=mux_factor,
    )
    channels, qubits = control.channel_budget(budget)
    rows = [{
        "cooling_power_w": cooling_w,
        "per_channel_power_w": per_channel_w,
        "mux_factor": mux_factor,
        "max_channels": channels,
        "max_qubits": qubits,
    }]
    envelope = ReportEnvelope(
        "control budget",
        {"cooling_w": cooling_w, "per_channel_w": per_channel_w, "mux": mux_factor},
        rows,
    )
    _emit(envelope, fmt)


@control_grp.command("fom")
@click.option("--power", "power_w", type=float, required=True, help="ADC power, W.")
@click.option("--rate", "sample_rate_sps", type=float, required=True,
              help="Sample rate, samples/s.")
@click.option("--bits", type=float, required=True, help="Effective bits.")
@format_option
@handle_domain_errors
def control_fom(power_w: float, sample_rate_sps: float, bits: float, fmt: str) -> None:
    """Walden and Schreier converter figures of merit."""
    spec = control.AdcSpec(power_w=power_w, sample_rate_sps=sample_rate_sps, bits=bits)
    rows = [{
        "power_w": power_w,
        "sample_rate_sps": sample_rate_sps,
        "bits": bits,
        "fom_walden_j_per_step": control.fom_walden(spec),
        "fom_schreier_db": control.fom_schreier(spec),
    }]
    envelope = ReportEnvelope(
        "control fom",
        {"power_w": power_w, "rate_sps": sample_rate_sps, "bits": bits},
        rows,
    )
    _emit(envelope, fmt)


main = cli

if __name__ == "__main__":
    main()
