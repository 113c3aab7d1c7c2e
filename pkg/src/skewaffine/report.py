"""Line-delimited report records and figure rendering.

A report is a sequence of JSON records, one per line, each with the
fields check, status and optionally witness/note/trials, followed by a
summary record. Records are serialized with sorted keys so identical
runs produce byte-identical files.

When a report is written next to an output path, the same records are
also rendered as figures (pass/fail chart and trial volume chart).
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Optional, Sequence

from .suites import CheckResult


def record_to_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def results_to_records(results: Sequence[CheckResult]) -> list[dict]:
    records = []
    for r in results:
        rec = {"check": r.name, "status": r.status, "trials": r.trials}
        if r.witness is not None:
            rec["witness"] = r.witness
        if r.note:
            rec["note"] = r.note
        records.append(rec)
    passed = sum(1 for r in results if r.ok)
    records.append({"check": "_summary",
                    "status": "pass" if passed == len(results) else "fail",
                    "passed": passed, "failed": len(results) - passed})
    return records


def report_text(records: Iterable[dict]) -> str:
    return "".join(record_to_line(r) + "\n" for r in records)


def write_report(records: Sequence[dict], path: str) -> None:
    with open(path, "w") as fh:
        fh.write(report_text(records))


def render_report_figures(records: Sequence[dict], outdir: str,
                          prefix: str = "report") -> list[str]:
    """Render a status chart and a trial-volume chart as PNG files."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    checks = [r for r in records if r.get("check") != "_summary"]
    names = [r["check"] for r in checks]
    passed = [1 if r["status"] == "pass" else 0 for r in checks]
    colors = ["#2a7e43" if p else "#b03a2e" for p in passed]
    paths = []

    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.4 * len(names) + 1)))
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xticks([])
    ax.invert_yaxis()
    ax.set_title("check status (green pass, red fail)")
    for idx, r in enumerate(checks):
        ax.text(0.5, idx, r["status"], va="center", ha="center",
                color="white", fontsize=8)
    fig.tight_layout()
    status_path = os.path.join(outdir, f"{prefix}_status.png")
    fig.savefig(status_path, dpi=120)
    plt.close(fig)
    paths.append(status_path)

    trials = [r.get("trials", 0) for r in checks]
    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.4 * len(names) + 1)))
    ax.barh(range(len(names)), trials, color="#32628d")
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("trials")
    ax.set_title("trials per check")
    fig.tight_layout()
    trials_path = os.path.join(outdir, f"{prefix}_trials.png")
    fig.savefig(trials_path, dpi=120)
    plt.close(fig)
    paths.append(trials_path)
    return paths
