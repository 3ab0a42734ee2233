"""Structured command results with text/json/csv rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    command: str
    group: str | None = None
    status: str = "info"  # pass | fail | info
    payload: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "group": self.group,
            "status": self.status,
            "payload": self.payload,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True)


def render_rows_text(headers: list[str], rows: list[list]) -> str:
    """Plain aligned table."""
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for row in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(out)


def render_rows_csv(headers: list[str], rows: list[list]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def verify_rows(payload_rows: list[dict]) -> list[list]:
    """Flatten verify payload rows (name/expected/computed/match)."""
    return [[r["name"], r["expected"], r["computed"], "ok" if r["match"] else "MISMATCH"] for r in payload_rows]
