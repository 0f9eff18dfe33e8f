"""Figure and delimited-file rendering for analysis reports."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import AnalysisReport
from .codes import LinearCode

__all__ = ["save_report_artifacts", "plot_weight_distribution"]


def plot_weight_distribution(
    distribution, report: AnalysisReport, path: Path
) -> None:
    """Bar chart of codeword counts by weight with the bounds marked."""
    weights = list(range(len(distribution)))
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(weights, distribution, width=0.8, color="#4878b0")
    ax.set_yscale("symlog")
    ax.set_xlabel("weight")
    ax.set_ylabel("codewords")
    n = report.n * report.n_prime
    ax.set_title(f"weight distribution, n={n}, k={report.rank}")
    marks = [
        (report.lower_bound, "lower bound", "#d1a037"),
        (report.upper_bound, "upper bound", "#b04848"),
        (report.exact_distance, "exact distance", "#3f8f4a"),
    ]
    seen = set()
    for value, label, color in marks:
        if value is None or (isinstance(value, float) and math.isinf(value)):
            continue
        style = "--" if value in seen else "-"
        seen.add(value)
        ax.axvline(value, color=color, linestyle=style, label=f"{label} = {value}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _write_per_alpha_tsv(report: AnalysisReport, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t")
        writer.writerow(
            [
                "alpha",
                "c_k_inter", "c_k_sum", "c_d_inter", "c_d_sum",
                "d_k_inter", "d_k_sum", "d_d_inter", "d_d_sum",
            ]
        )
        for row in report.per_alpha_table:
            def cell(x):
                return "inf" if isinstance(x, float) and math.isinf(x) else x

            writer.writerow(
                [
                    row.alpha.compact(),
                    row.c_k_inter, row.c_k_sum, cell(row.c_d_inter), row.c_d_sum,
                    row.d_k_inter, row.d_k_sum, cell(row.d_d_inter), row.d_d_sum,
                ]
            )


def _write_psi_tsv(tables, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t")
        writer.writerow(["side", "psi0", "psi0_star", "value"])
        for side, (_, rows) in zip(("m1", "m2"), tables):
            for row in rows:
                writer.writerow(
                    [
                        side,
                        ",".join(a.compact() for a in row.psi0),
                        ",".join(a.compact() for a in row.psi0_star),
                        row.value,
                    ]
                )


def save_report_artifacts(
    report: AnalysisReport,
    outdir: Path,
    code: LinearCode | None = None,
    psi_tables=None,
    budget: int | None = None,
) -> list[Path]:
    """Write report.json, delimited tables, and the weight figure.

    Returns the list of files written.  The weight figure needs the
    constructed code and an enumeration inside the budget; it is skipped
    silently otherwise.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    json_path = outdir / "report.json"
    json_path.write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    written.append(json_path)

    alpha_path = outdir / "per_alpha.tsv"
    _write_per_alpha_tsv(report, alpha_path)
    written.append(alpha_path)

    if psi_tables is not None:
        psi_path = outdir / "psi_table.tsv"
        _write_psi_tsv(psi_tables, psi_path)
        written.append(psi_path)

    if code is not None and (budget is None or (1 << code.k) <= budget):
        distribution = code.weight_distribution(
            budget if budget is not None else 1 << code.k
        )
        csv_path = outdir / "weights.csv"
        with csv_path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["weight", "count"])
            for w, count in enumerate(distribution):
                writer.writerow([w, count])
        written.append(csv_path)
        fig_path = outdir / "weights.png"
        plot_weight_distribution(distribution, report, fig_path)
        written.append(fig_path)
    return written
