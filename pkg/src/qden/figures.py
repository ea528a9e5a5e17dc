"""Figure rendering for sweep reports.

Each renderer takes the result rows of a sweep envelope and writes a
figure file next to the delimited output, keyed by the output path's
extension (png/pdf/svg).
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STYLE = {
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "figure.figsize": (5.0, 3.4),
    "savefig.dpi": 150,
}


def _finish(fig, path: str | os.PathLike[str]) -> str:
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return str(path)


def save_density_figure(rows: list[dict], path: str | os.PathLike[str]) -> str:
    """Information density vs node pitch, log-log."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        pitches = [row["delta_g_nm"] for row in rows]
        dens = [row["density_mqb_per_cm2"] for row in rows]
        ax.plot(pitches, dens, "o-", color="tab:red")
        for row, x, y in zip(rows, pitches, dens):
            ax.annotate(row["node"], (x, y), textcoords="offset points",
                        xytext=(4, 4), fontsize=7)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.invert_xaxis()  # march of miniaturization, largest pitch first
        ax.set_xlabel("contacted gate pitch (nm)")
        ax.set_ylabel("logical qubit density (Mqb/cm$^2$)")
        code = rows[0].get("code", "")
        ax.set_title(f"quantum information density vs node ({code})")
        return _finish(fig, path)


def save_window_figure(rows: list[dict], path: str | os.PathLike[str]) -> str:
    """Operation-time bounds vs node pitch with the feasible band shaded."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        pitches = [row["delta_g_nm"] for row in rows]
        t_min = [row["t_min_s"] for row in rows]
        t_max = [row["t_max_s"] for row in rows]
        ax.plot(pitches, t_min, "o-", color="black", label="min operation time")
        ax.plot(pitches, t_max, "s--", color="tab:blue", label="coherence bound")
        feasible = [row["feasible"] for row in rows]
        ax.fill_between(pitches, t_min, t_max,
                        where=[lo <= hi for lo, hi in zip(t_min, t_max)],
                        alpha=0.15, color="tab:green", label="feasible window")
        for row, x, y, ok in zip(rows, pitches, t_min, feasible):
            ax.annotate(row["node"], (x, y), textcoords="offset points",
                        xytext=(4, -10), fontsize=7,
                        color="tab:green" if ok else "tab:red")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.invert_xaxis()
        ax.set_xlabel("contacted gate pitch (nm)")
        ax.set_ylabel("operation time (s)")
        ax.set_title("operation-time constraints vs node")
        ax.legend(fontsize=7)
        return _finish(fig, path)


def save_layout_figure(rows: list[dict], path: str | os.PathLike[str]) -> str:
    """Block areas and density vs node, twin log axes."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        pitches = [row["delta_g_nm"] for row in rows]
        for key, label, style in (("a_d_um2", "D module", "o-"),
                                  ("a_qb_um2", "logical qubit", "s-"),
                                  ("a_qbyte_um2", "qubyte", "^-")):
            ax.plot(pitches, [row[key] for row in rows], style, label=label)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.invert_xaxis()
        ax.set_xlabel("contacted gate pitch (nm)")
        ax.set_ylabel("area ($\\mu$m$^2$)")
        twin = ax.twinx()
        twin.plot(pitches, [row["delta_qi_mqb_per_cm2"] for row in rows],
                  "d:", color="tab:red", label="density")
        twin.set_yscale("log")
        twin.set_ylabel("density (Mqb/cm$^2$)", color="tab:red")
        ax.set_title("layout scaling vs node")
        ax.legend(fontsize=7, loc="upper left")
        return _finish(fig, path)
