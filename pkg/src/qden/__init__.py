"""Resource estimation for CMOS silicon quantum-computer architectures.

Given a technology node's critical feature sizes, the toolkit computes
device-module geometry, logical-qubit areas and information density,
feasible qubit operation-time windows, factoring-run footprints, and
cryogenic control-electronics budgets.
"""

from .codes import (
    BlockConvention,
    CodeKind,
    CodeSpec,
    density,
    encoded_error_rate,
    physical_qubit_area,
    surface_logical_footprint,
)
from .communication import (
    CommParams,
    shuttle_speed_bound,
    shuttle_time,
    swap_chain_time,
)
from .control import (
    AdcSpec,
    PowerBudget,
    channel_budget,
    dac_power,
    fom_schreier,
    fom_walden,
)
from .errors import (
    DegenerateGeometryError,
    NodeValidationError,
    QdenError,
    UnknownNodeError,
)
from .layout import (
    LayoutReport,
    ModuleDims,
    concatenated_area,
    layout_report,
    module_dims,
    qubit_dims,
    qubyte_dims,
)
from .shor import (
    ShorEstimate,
    ShorRow,
    shor_area,
    shor_dataset,
    shor_estimate,
    shor_runtime,
)
from .technology import (
    TechNode,
    builtin_nodes,
    get_node,
    load_custom_node,
    load_nodes_file,
    node_registry,
    nodes_to_csv,
)
from .timing import (
    ConstraintWindow,
    QubitPhysicsParams,
    TunnelModel,
    adiabatic_min_time,
    coherence_max_time,
    feasibility_window,
    j_max,
    t_pi8,
    tunnel_coupling,
)

__version__ = "0.1.0"

__all__ = [
    "AdcSpec",
    "BlockConvention",
    "CodeKind",
    "CodeSpec",
    "CommParams",
    "ConstraintWindow",
    "DegenerateGeometryError",
    "LayoutReport",
    "ModuleDims",
    "NodeValidationError",
    "PowerBudget",
    "QdenError",
    "QubitPhysicsParams",
    "ShorEstimate",
    "ShorRow",
    "TechNode",
    "TunnelModel",
    "UnknownNodeError",
    "adiabatic_min_time",
    "builtin_nodes",
    "channel_budget",
    "coherence_max_time",
    "concatenated_area",
    "dac_power",
    "density",
    "encoded_error_rate",
    "feasibility_window",
    "fom_schreier",
    "fom_walden",
    "get_node",
    "j_max",
    "layout_report",
    "load_custom_node",
    "load_nodes_file",
    "module_dims",
    "node_registry",
    "nodes_to_csv",
    "physical_qubit_area",
    "qubit_dims",
    "qubyte_dims",
    "shor_area",
    "shor_dataset",
    "shor_estimate",
    "shor_runtime",
    "shuttle_speed_bound",
    "shuttle_time",
    "surface_logical_footprint",
    "swap_chain_time",
    "t_pi8",
    "tunnel_coupling",
]
