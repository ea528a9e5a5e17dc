"""Resource estimates for running the factoring algorithm.

Physical-qubit counts and surface-code distances per problem size are
bundled data: the distillation model behind them is not reproducible
from first principles here, so non-tabulated sizes are rejected unless
the caller supplies the counts explicitly.  Chip area follows from the
per-physical-qubit lattice area at a node; runtime follows a cubic
cycle-count law at a fixed stabilizer-cycle time.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .codes import BlockConvention, physical_qubit_area
from .errors import QdenError
from .technology import TechNode
from .units import NM2_PER_MM2, SECONDS_PER_HOUR

# Total stabilizer cycles scale as 60 * n^3 for an n-bit factorization;
# the constant is recovered by inverting the 1024-bit runtime anchor
# (3.58 h at 200 ns per cycle) and holds across the whole dataset.
CYCLES_PER_BIT_CUBED = 60

# One surface-code stabilizer round, limited by the 100 ns measurement.
DEFAULT_CYCLE_TIME_S = 200e-9

DATASET_FIELDS = ("n_bits", "data_qubits", "distance", "n_physical")


@dataclass(frozen=True)
class ShorRow:
    """Resource requirements for factoring one problem size."""

    n_bits: int
    data_qubits: int
    distance: int
    n_physical: int

    def __post_init__(self) -> None:
        if self.n_bits < 2:
            raise QdenError(f"problem size must be at least 2 bits, got {self.n_bits}")
        if self.data_qubits <= 0 or self.distance <= 0 or self.n_physical <= 0:
            raise QdenError("qubit counts and distance must be positive")


@dataclass(frozen=True)
class ShorEstimate:
    """Area and runtime of one factoring run on one node."""

    row: ShorRow
    node: TechNode
    area_mm2: float
    runtime_h: float
    t_cycle_s: float


@lru_cache(maxsize=1)
def _dataset() -> tuple[ShorRow, ...]:
    text = resources.files("qden").joinpath("data/shor_resources.csv").read_text("utf-8")
    reader = csv.DictReader(io.StringIO(text))
    rows = tuple(
        ShorRow(
            n_bits=int(r["n_bits"]),
            data_qubits=int(r["data_qubits"]),
            distance=int(r["distance"]),
            n_physical=int(r["n_physical"]),
        )
        for r in reader
    )
    return rows


def shor_dataset() -> list[ShorRow]:
    """The bundled problem sizes, 128 through 8192 bits."""
    return list(_dataset())


def shor_area(n_physical: int, node: TechNode,
              convention: BlockConvention = BlockConvention.QUARTER_BLOCK) -> float:
    """Chip area of ``n_physical`` lattice qubits on a node, mm^2."""
    if n_physical <= 0:
        raise QdenError(f"physical qubit count must be positive, got {n_physical}")
    return n_physical * physical_qubit_area(node, convention) / NM2_PER_MM2


def shor_runtime(n_bits: int, t_cycle_s: float = DEFAULT_CYCLE_TIME_S) -> float:
    """Runtime of an n-bit factorization, hours."""
    if n_bits < 2:
        raise QdenError(f"problem size must be at least 2 bits, got {n_bits}")
    if t_cycle_s <= 0:
        raise QdenError(f"cycle time must be positive, got {t_cycle_s}")
    return CYCLES_PER_BIT_CUBED * n_bits**3 * t_cycle_s / SECONDS_PER_HOUR


def shor_estimate(n_bits: int, node: TechNode,
                  distance: int | None = None,
                  n_physical: int | None = None,
                  convention: BlockConvention = BlockConvention.QUARTER_BLOCK,
                  t_cycle_s: float = DEFAULT_CYCLE_TIME_S) -> ShorEstimate:
    """Full estimate for one problem size on one node.

    Tabulated sizes use the bundled (distance, n_physical); other sizes
    require both to be supplied explicitly.
    """
    if distance is not None and n_physical is not None:
        row = ShorRow(n_bits=n_bits, data_qubits=2 * n_bits,
                      distance=distance, n_physical=n_physical)
    else:
        matches = [r for r in _dataset() if r.n_bits == n_bits]
        if not matches:
            sizes = ", ".join(str(r.n_bits) for r in _dataset())
            raise QdenError(
                f"no physical-qubit model for {n_bits}-bit problems; tabulated "
                f"sizes are {sizes} (supply distance and n_physical explicitly "
                "for other sizes)"
            )
        row = matches[0]
    return ShorEstimate(
        row=row,
        node=node,
        area_mm2=shor_area(row.n_physical, node, convention),
        runtime_h=shor_runtime(n_bits, t_cycle_s),
        t_cycle_s=t_cycle_s,
    )
