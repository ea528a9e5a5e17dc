"""Technology-node registry.

A node is a named CMOS manufacturing generation described by five
critical feature sizes, all in integer nanometres:

* ``delta_g``  -- contacted gate pitch (sets the inter-dot distance)
* ``delta_ic`` -- first-level interconnect pitch
* ``w_si``     -- silicon wire width hosting the dots
* ``l_bu``     -- undoped buffer length
* ``l_hdd``    -- highly-doped drain length

Seven built-in generations from 65 nm down to 7 nm ship with the
package; custom nodes can be supplied as CSV records with the same
fields.  Nodes are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import csv
import io
import os
import warnings
from dataclasses import dataclass, asdict
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping

from .errors import NodeValidationError, UnknownNodeError

# Low-energy implantation keeps lateral dopant straggling at 5-10 nm;
# buffers shorter than this margin cannot guarantee an undoped channel.
MIN_BUFFER_NM = 20

# Sizing convention used by the built-in dataset.  Custom nodes may break
# it (the geometry formulas consume the five lengths independently), but
# a deviation is worth flagging.
HDD_EQUALS_IC = "l_hdd == delta_ic"
BU_EQUALS_2IC = "l_bu == 2 * delta_ic"

CSV_FIELDS = ("name", "delta_g_nm", "delta_ic_nm", "w_si_nm", "l_bu_nm", "l_hdd_nm")

_LENGTH_FIELDS = ("delta_g", "delta_ic", "w_si", "l_bu", "l_hdd")


class TechnologyWarning(UserWarning):
    """Base class for non-fatal node diagnostics."""


class StragglingWarning(TechnologyWarning):
    """Buffer length lies inside the dopant lateral-straggling range."""


class ConstructionRuleWarning(TechnologyWarning):
    """Custom node deviates from the built-in sizing convention."""


@dataclass(frozen=True)
class TechNode:
    """Critical feature sizes of one technology node (integer nm)."""

    name: str
    delta_g: int
    delta_ic: int
    w_si: int
    l_bu: int
    l_hdd: int

    def __post_init__(self) -> None:
        for field in _LENGTH_FIELDS:
            value = getattr(self, field)
            if isinstance(value, bool) or not isinstance(value, int):
                raise NodeValidationError(
                    f"node {self.name!r}: {field} must be an integer number of nm, "
                    f"got {value!r}"
                )
            if value <= 0:
                raise NodeValidationError(
                    f"node {self.name!r}: {field} must be positive, got {value}"
                )
        if self.l_bu < MIN_BUFFER_NM:
            warnings.warn(
                f"node {self.name!r}: l_bu = {self.l_bu} nm is below the "
                f"{MIN_BUFFER_NM} nm dopant-straggling margin",
                StragglingWarning,
                stacklevel=2,
            )

    def follows_construction_rules(self) -> bool:
        return self.l_hdd == self.delta_ic and self.l_bu == 2 * self.delta_ic

    def as_record(self) -> dict[str, int | str]:
        """Field map using the CSV column names."""
        values = asdict(self)
        return {
            "name": values["name"],
            "delta_g_nm": values["delta_g"],
            "delta_ic_nm": values["delta_ic"],
            "w_si_nm": values["w_si"],
            "l_bu_nm": values["l_bu"],
            "l_hdd_nm": values["l_hdd"],
        }


def _as_int_nm(field: str, value: object) -> int:
    if isinstance(value, bool):
        raise NodeValidationError(f"{field}: expected a length in nm, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if value.is_integer():
            return int(value)
        raise NodeValidationError(
            f"{field}: lengths are integer nm, got non-integer {value!r}"
        )
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise NodeValidationError(
                f"{field}: lengths are integer nm, got {value!r}"
            ) from None
    raise NodeValidationError(f"{field}: cannot interpret {value!r} as a length in nm")


def load_custom_node(record: Mapping[str, object]) -> TechNode:
    """Build a validated node from a field map (CSV column names).

    The built-in sizing convention (``l_hdd == delta_ic``,
    ``l_bu == 2 * delta_ic``) is not enforced; deviations emit a
    :class:`ConstructionRuleWarning`.

    Raises:
        NodeValidationError: missing field, non-positive or non-integer length.
    """
    missing = [f for f in CSV_FIELDS if f not in record or record[f] in (None, "")]
    if missing:
        raise NodeValidationError(f"node record missing fields: {', '.join(missing)}")

    node = TechNode(
        name=str(record["name"]),
        delta_g=_as_int_nm("delta_g_nm", record["delta_g_nm"]),
        delta_ic=_as_int_nm("delta_ic_nm", record["delta_ic_nm"]),
        w_si=_as_int_nm("w_si_nm", record["w_si_nm"]),
        l_bu=_as_int_nm("l_bu_nm", record["l_bu_nm"]),
        l_hdd=_as_int_nm("l_hdd_nm", record["l_hdd_nm"]),
    )
    if node.l_hdd != node.delta_ic:
        warnings.warn(
            f"node {node.name!r}: l_hdd = {node.l_hdd} nm deviates from the "
            f"{HDD_EQUALS_IC} convention (delta_ic = {node.delta_ic} nm)",
            ConstructionRuleWarning,
            stacklevel=2,
        )
    if node.l_bu != 2 * node.delta_ic:
        warnings.warn(
            f"node {node.name!r}: l_bu = {node.l_bu} nm deviates from the "
            f"{BU_EQUALS_2IC} convention (delta_ic = {node.delta_ic} nm)",
            ConstructionRuleWarning,
            stacklevel=2,
        )
    return node


def parse_nodes_csv(text: str, *, source: str = "<string>") -> list[TechNode]:
    """Parse nodes from CSV text with the documented header."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_FIELDS:
        raise NodeValidationError(
            f"{source}: expected header {','.join(CSV_FIELDS)}, "
            f"got {reader.fieldnames!r}"
        )
    return [load_custom_node(row) for row in reader]


def load_nodes_file(path: str | os.PathLike[str]) -> list[TechNode]:
    """Load custom nodes from a CSV file."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        return parse_nodes_csv(handle.read(), source=str(path))


def nodes_to_csv(nodes: Iterable[TechNode]) -> str:
    """Serialize nodes to CSV text in the documented format."""
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for node in nodes:
        writer.writerow(node.as_record())
    return out.getvalue()


@lru_cache(maxsize=1)
def _builtin_nodes() -> tuple[TechNode, ...]:
    text = resources.files("qden").joinpath("data/builtin_nodes.csv").read_text("utf-8")
    return tuple(parse_nodes_csv(text, source="builtin dataset"))


def builtin_nodes() -> list[TechNode]:
    """The seven built-in nodes, 65 nm down to 7 nm."""
    return list(_builtin_nodes())


def node_registry(custom_path: str | os.PathLike[str] | None = None) -> dict[str, TechNode]:
    """Name-indexed registry: built-ins plus an optional custom file.

    A custom node with a built-in name replaces the built-in entry.
    """
    registry = {node.name: node for node in _builtin_nodes()}
    if custom_path is not None:
        for node in load_nodes_file(custom_path):
            registry[node.name] = node
    return registry


def get_node(name: str, custom_path: str | os.PathLike[str] | None = None) -> TechNode:
    """Look a node up by name, raising :class:`UnknownNodeError` if absent."""
    registry = node_registry(custom_path)
    try:
        return registry[name]
    except KeyError:
        known = ", ".join(registry)
        raise UnknownNodeError(f"unknown node {name!r} (known: {known})") from None
