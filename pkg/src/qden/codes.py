"""Error-correction footprint and density models.

Three code families are covered: the seven-qubit CSS code realized by
the D/C/T module layout (density defined through the qubyte), recursive
concatenation of that code, and surface codes on a nearest-neighbour
lattice costed at ~8 d^2 physical qubits per logical qubit under
lattice surgery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import QdenError
from .layout import concatenated_area, layout_report
from .technology import TechNode
from .units import NM2_PER_CM2, UM2_PER_CM2


class CodeKind(str, Enum):
    STEANE = "steane"
    CONCATENATED = "concatenated"
    SURFACE = "surface"


class BlockConvention(str, Enum):
    """Per-physical-qubit area on the 2D lattice.

    Four double-dot qubits tile an ``(8 delta_g)^2`` block; the
    per-qubit share is that block divided by four.  ``FULL_BLOCK``
    charges the whole block to each qubit instead.
    """

    QUARTER_BLOCK = "quarter_block"
    FULL_BLOCK = "full_block"


# Representative error thresholds per code family.
DEFAULT_THRESHOLDS: dict[CodeKind, float] = {
    CodeKind.STEANE: 1e-4,
    CodeKind.CONCATENATED: 1e-3,
    CodeKind.SURFACE: 1e-2,
}

MIN_SURFACE_DISTANCE = 3
SURFACE_QUBITS_PER_LOGICAL = 8  # times d^2, lattice-surgery costing


@dataclass(frozen=True)
class CodeSpec:
    """A code family, its distance (surface only) and error threshold."""

    kind: CodeKind
    distance: int | None = None
    error_threshold: float | None = None

    def __post_init__(self) -> None:
        kind = CodeKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is CodeKind.SURFACE:
            if self.distance is None:
                raise QdenError("surface code requires a distance")
            # Even distances are permitted: resource tables use them.
            if self.distance < MIN_SURFACE_DISTANCE:
                raise QdenError(
                    f"surface code distance must be >= {MIN_SURFACE_DISTANCE}, "
                    f"got {self.distance}"
                )
        if self.error_threshold is not None and not 0 < self.error_threshold < 1:
            raise QdenError(
                f"error threshold must lie in (0, 1), got {self.error_threshold}"
            )

    @property
    def threshold(self) -> float:
        if self.error_threshold is not None:
            return self.error_threshold
        return DEFAULT_THRESHOLDS[self.kind]


def physical_qubit_area(node: TechNode,
                        convention: BlockConvention = BlockConvention.QUARTER_BLOCK) -> int:
    """Area charged to one physical qubit on the lattice, nm^2 (exact)."""
    block = (8 * node.delta_g) ** 2
    if BlockConvention(convention) is BlockConvention.QUARTER_BLOCK:
        return block // 4  # 16 delta_g^2, exact
    return block


def surface_logical_footprint(distance: int, node: TechNode,
                              convention: BlockConvention = BlockConvention.QUARTER_BLOCK) -> int:
    """Chip area of one surface-code logical qubit, nm^2 (exact)."""
    if distance < MIN_SURFACE_DISTANCE:
        raise QdenError(
            f"surface code distance must be >= {MIN_SURFACE_DISTANCE}, got {distance}"
        )
    return SURFACE_QUBITS_PER_LOGICAL * distance * distance * physical_qubit_area(node, convention)


def density(code: CodeSpec, node: TechNode,
            convention: BlockConvention = BlockConvention.QUARTER_BLOCK) -> float:
    """Logical qubits per cm^2 for the given code on the given node."""
    if code.kind is CodeKind.STEANE:
        return layout_report(node).delta_qi
    if code.kind is CodeKind.CONCATENATED:
        return UM2_PER_CM2 / concatenated_area(node)
    return NM2_PER_CM2 / surface_logical_footprint(code.distance, node, convention)


def encoded_error_rate(p: float, p_th: float) -> float:
    """Logical error rate after one level of encoding.

    A physical rate a factor ``x = p_th / p`` below threshold encodes
    to ``p_th / x^2 = p^2 / p_th``.
    """
    if p <= 0 or p_th <= 0:
        raise QdenError("error rates must be positive")
    if p >= p_th:
        raise QdenError(
            f"physical error rate {p} is not below threshold {p_th}; "
            "encoding does not help"
        )
    return p * p / p_th
