"""Reference-table fixtures: one CSV record per published table row.

Columns: ``model, table, quantity, base_dim, cy, expr, printed``.  ``expr`` is
the value compared against; ``printed`` is filled only when the published row
differs from ``expr`` (a misprint) and keeps the published text for review.
"""
from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path

FIXTURE_ENV = "CREPANT_FIXTURE_DIR"
FIXTURE_FILE = "reference_tables.csv"
FIELDS = ("model", "table", "quantity", "base_dim", "cy", "expr", "printed")


@dataclass(frozen=True)
class FixtureRow:
    model: str
    table: str
    quantity: str
    base_dim: int | None
    cy: bool
    expr: str
    printed: str = ""


def fixture_path(directory: str | os.PathLike | None = None) -> Path:
    if directory is None:
        directory = os.environ.get(FIXTURE_ENV)
    if directory is None:
        directory = Path(__file__).parent / "data"
    return Path(directory) / FIXTURE_FILE


def load_fixtures(directory: str | os.PathLike | None = None) -> list[FixtureRow]:
    path = fixture_path(directory)
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = set(FIELDS) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"{path}: missing column(s) {sorted(missing)}")
        for rec in reader:
            rows.append(FixtureRow(
                model=rec["model"],
                table=rec["table"],
                quantity=rec["quantity"],
                base_dim=int(rec["base_dim"]) if rec["base_dim"] else None,
                cy=rec["cy"].strip() in ("1", "true", "True"),
                expr=rec["expr"],
                printed=rec.get("printed") or "",
            ))
    return rows


def write_fixtures(rows, path: str | os.PathLike) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=FIELDS)
        writer.writeheader()
        for r in rows:
            writer.writerow({
                "model": r.model,
                "table": r.table,
                "quantity": r.quantity,
                "base_dim": "" if r.base_dim is None else r.base_dim,
                "cy": int(r.cy),
                "expr": r.expr,
                "printed": r.printed,
            })
