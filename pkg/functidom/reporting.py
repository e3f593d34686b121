"""Serialize verdicts as text, JSON or CSV.

Machine formats carry 0-based witness indices and end with a summary
record; text output uses u_i / v_i' labels.
"""
from __future__ import annotations

import io
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Union

import pandas as pd

from .errors import InvalidParameterError, ReportWriteError
from .labels import format_labels
from .theorems import TheoremVerdict

_LOG = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")
COLUMNS = ["theorem_id", "instance", "claim", "observed", "passed", "witness"]
SUMMARY_ID = "SUMMARY"


def verdict_record(v: TheoremVerdict) -> Dict[str, object]:
    """JSON object for one verdict, keys in column order."""
    return {
        "theorem_id": v.theorem_id,
        "instance": v.instance,
        "claim": v.claim,
        "observed": v.observed,
        "passed": v.passed,
        "witness": list(v.witness) if v.witness is not None else None,
    }


def summary_record(verdicts: List[TheoremVerdict]) -> Dict[str, object]:
    failed = sum(1 for v in verdicts if not v.passed)
    return {
        "theorem_id": SUMMARY_ID,
        "instance": f"{len(verdicts)} verdicts, {failed} failed",
        "claim": 0,
        "observed": failed,
        "passed": failed == 0,
        "witness": None,
    }


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(i) for i in value)
    return str(value)


def format_text(v: TheoremVerdict) -> str:
    status = "PASS" if v.passed else "FAIL"
    line = f"[{status}] {v.theorem_id} {v.instance}"
    if v.claim is not None or v.observed is not None:
        line += f": claim {v.claim if v.claim is not None else '-'} {v.relation} observed {v.observed if v.observed is not None else '-'}"
    if v.detail:
        line += f" ({v.detail})"
    if v.witness is not None:
        line += f" witness {format_labels(v.witness, v.base_order)}"
    return line


def render_json(verdicts: List[TheoremVerdict]) -> str:
    records = [verdict_record(v) for v in verdicts] + [summary_record(verdicts)]
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def render_csv(verdicts: List[TheoremVerdict]) -> str:
    records = [verdict_record(v) for v in verdicts] + [summary_record(verdicts)]
    df = pd.DataFrame([{col: _csv_cell(r[col]) for col in COLUMNS} for r in records], columns=COLUMNS)
    buffer = io.StringIO()
    df.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render_text(verdicts: List[TheoremVerdict]) -> str:
    lines = [format_text(v) for v in verdicts]
    failed = sum(1 for v in verdicts if not v.passed)
    lines.append(f"{len(verdicts)} verdicts, {failed} failed")
    return "\n".join(lines) + "\n"


def render(verdicts: Iterable[TheoremVerdict], fmt: str) -> str:
    verdicts = list(verdicts)
    if fmt == "json":
        return render_json(verdicts)
    if fmt == "csv":
        return render_csv(verdicts)
    if fmt == "text":
        return render_text(verdicts)
    raise InvalidParameterError(f"format must be one of {FORMATS}, got {fmt!r}")


def write_report(verdicts: Iterable[TheoremVerdict], path: Union[str, Path], fmt: str) -> Path:
    """Write the rendered report, creating parent directories."""
    target = Path(path)
    content = render(verdicts, fmt)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
    except OSError as e:
        raise ReportWriteError(f"cannot write report to {target}: {e}") from e
    _LOG.info("Report saved to %s", target)
    return target
