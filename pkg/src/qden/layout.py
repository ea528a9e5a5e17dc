"""Closed-form layout geometry for the double-dot qubit architecture.

Three building blocks tile the virtual layer: the data module (D)
holding two qubits with their reservoirs and charge sensors, the chain
module (C) for nearest-neighbour SWAP transport, and the T module (T)
joining perpendicular communication lines.  A seven-qubit encoded
logical qubit is assembled from ~20 of these modules, and eight
interconnected logical qubits form the "qubyte" block whose area
defines the effective per-qubit footprint including routing.

All dimensions are exact integer nanometres and areas exact integer
nm^2; floating point appears only in the per-cm^2 density computed at
the reporting boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateGeometryError
from .technology import TechNode
from .units import NM2_PER_CM2, NM2_PER_UM2

# Mask-area fractions left free for classical routing in the logical
# qubit and qubyte blocks.  Reference values; not derivable from the
# closed forms below.
UNUSED_AREA_FRACTION_QUBIT = 0.23
UNUSED_AREA_FRACTION_QUBYTE = 0.43


@dataclass(frozen=True)
class ModuleDims:
    """Width/height of the D, C and T modules, nm."""

    x_d: int
    y_d: int
    x_c: int
    y_c: int
    x_t: int
    y_t: int


@dataclass(frozen=True)
class LayoutReport:
    """All module, qubit and qubyte dimensions plus areas and density."""

    node: TechNode
    x_d: int
    y_d: int
    x_c: int
    y_c: int
    x_t: int
    y_t: int
    x_qb: int
    y_qb: int
    x_qbyte: int
    y_qbyte: int
    a_d: int        # D-module area, nm^2
    a_qb: int       # logical-qubit area, nm^2
    a_qbyte: int    # qubyte area, nm^2
    delta_qi: float  # logical qubits per cm^2 (8 per qubyte)


def module_dims(node: TechNode) -> ModuleDims:
    """Evaluate the D/C/T closed forms for one node (exact integers)."""
    x_d = max(6 * node.delta_ic,
              4 * node.delta_g + node.l_hdd + node.l_bu + node.delta_ic)
    y_d = 8 * node.delta_ic
    x_c = 4 * node.delta_g
    y_c = 8 * node.delta_ic + node.w_si
    x_t = 20 * node.delta_ic + node.l_bu + node.w_si
    y_t = 14 * node.delta_g
    return ModuleDims(x_d=x_d, y_d=y_d, x_c=x_c, y_c=y_c, x_t=x_t, y_t=y_t)


def qubit_dims(node: TechNode) -> tuple[int, int]:
    """Logical-qubit bounding box (x, y) in nm."""
    dims = module_dims(node)
    x_qb = 20 * dims.y_t
    y_qb = 2 * dims.x_t - node.w_si
    if y_qb <= 0:
        raise DegenerateGeometryError(
            f"node {node.name!r}: logical-qubit height 2*x_t - w_si = {y_qb} nm"
        )
    return x_qb, y_qb


def qubyte_dims(node: TechNode) -> tuple[int, int]:
    """Qubyte bounding box (x, y) in nm.

    The bracketed pitch quotients are floors; for positive integers
    ``floor(a/b + 1) == a//b + 1``, which keeps the whole computation
    exact and makes the quotient invariant under uniform scaling.
    """
    dims = module_dims(node)
    x_qbyte = dims.x_c * (dims.x_t // dims.x_c + 1) + 40 * dims.y_t + node.w_si
    y_qbyte = (7 * dims.x_c * (max(dims.x_t, dims.x_d) // dims.x_c + 1)
               + 2 * dims.x_t + 7 * dims.y_t)
    return x_qbyte, y_qbyte


def layout_report(node: TechNode) -> LayoutReport:
    """Assemble dimensions, areas and information density for one node."""
    dims = module_dims(node)
    x_qb, y_qb = qubit_dims(node)
    x_qbyte, y_qbyte = qubyte_dims(node)
    all_dims = (dims.x_d, dims.y_d, dims.x_c, dims.y_c, dims.x_t, dims.y_t,
                x_qb, y_qb, x_qbyte, y_qbyte)
    if min(all_dims) <= 0:
        raise DegenerateGeometryError(
            f"node {node.name!r}: non-positive dimension in {all_dims}"
        )
    a_d = dims.x_d * dims.y_d
    a_qb = x_qb * y_qb
    a_qbyte = x_qbyte * y_qbyte
    # Eight logical qubits per qubyte; density is per cm^2 of chip.
    delta_qi = 8 * NM2_PER_CM2 / a_qbyte
    return LayoutReport(
        node=node,
        x_d=dims.x_d, y_d=dims.y_d, x_c=dims.x_c, y_c=dims.y_c,
        x_t=dims.x_t, y_t=dims.y_t,
        x_qb=x_qb, y_qb=y_qb, x_qbyte=x_qbyte, y_qbyte=y_qbyte,
        a_d=a_d, a_qb=a_qb, a_qbyte=a_qbyte,
        delta_qi=delta_qi,
    )


def concatenated_area(node: TechNode) -> float:
    """Footprint of a doubly-encoded (recursive) logical qubit, um^2.

    Equals ``a_qb**2 / a_d``: the first-level logical qubits become the
    building blocks of the second encoding level.
    """
    report = layout_report(node)
    return report.a_qb ** 2 / report.a_d / NM2_PER_UM2
