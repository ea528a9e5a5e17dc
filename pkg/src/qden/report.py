"""Report envelope shared by all CLI subcommands.

Every command produces one envelope: the command label, a complete echo
of its inputs (so a report is reproducible from its own header), a list
of result rows whose column names carry explicit unit suffixes, and any
warnings raised along the way.  Three renderers are provided; the CSV
and JSON forms are deterministic byte-for-byte for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class ReportEnvelope:
    command: str
    inputs: dict[str, object]
    results: list[dict[str, object]]
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict[str, object]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
        }


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)  # shortest round-trip form
    return str(value)


def render_csv(envelope: ReportEnvelope) -> str:
    """Results table only: header row plus one line per result row."""
    out = io.StringIO()
    if not envelope.results:
        return ""
    writer = csv.writer(out, lineterminator="\n")
    columns = list(envelope.results[0].keys())
    writer.writerow(columns)
    for row in envelope.results:
        writer.writerow([_cell(row.get(col)) for col in columns])
    return out.getvalue()


def render_json(envelope: ReportEnvelope) -> str:
    return json.dumps(envelope.as_dict(), indent=2)


def render_table(envelope: ReportEnvelope) -> str:
    """Human-oriented rendering with the inputs echo and warnings inline."""
    lines = [f"# {envelope.command}"]
    if envelope.inputs:
        echo = "  ".join(f"{k}={_table_cell(v)}" for k, v in envelope.inputs.items())
        lines.append(f"# inputs: {echo}")
    if envelope.results:
        columns = list(envelope.results[0].keys())
        rendered = [[_table_cell(row.get(col)) for col in columns]
                    for row in envelope.results]
        widths = [max(len(col), *(len(r[i]) for r in rendered))
                  for i, col in enumerate(columns)]
        lines.append("  ".join(col.ljust(w) for col, w in zip(columns, widths)))
        for r in rendered:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)))
    for message in envelope.warnings:
        lines.append(f"warning: {message}")
    return "\n".join(lines)


def _table_cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def render(envelope: ReportEnvelope, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(envelope)
    if fmt == "json":
        return render_json(envelope)
    return render_table(envelope)
