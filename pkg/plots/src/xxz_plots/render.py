"""Figure rendering on top of the CSV contract.

Overlap figures: ED values as markers, the closed-form value as a solid
line, dashed guides at the critical fields and at the comparison field.
Convergence panels: |s_finite − s_thermo| on a log scale over L plus a
formatted value table.  Rendering never mutates its inputs, and a pinned
style profile makes re-renders byte-identical.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .figspec import FigureSpec, SchemaError, clean_series, load_rows  # noqa: E402

BASE_STYLE = {
    "figure.figsize": (7.2, 4.6),
    "figure.dpi": 130,
    "savefig.dpi": 130,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.25,
    "svg.hashsalt": "xxz-overlap",
}

SERIES_STYLE = {
    "s_ed": dict(marker="o", linestyle="none", color="#c44e52", mfc="none",
                 label="exact diagonalization"),
    "s_finite": dict(marker="s", linestyle="none", color="#4c72b0", mfc="none",
                     markersize=4, label="determinant formula"),
    "s_product": dict(marker="^", linestyle="none", color="#8172b2", mfc="none",
                      markersize=4, label="product formula"),
    "s_thermo": dict(linestyle="-", color="#222222", label="closed form (L → ∞)"),
}


def _apply_style(style_path: str | None):
    params = dict(BASE_STYLE)
    if style_path:
        params.update(json.loads(Path(style_path).read_text()))
    return plt.rc_context(params)


def _guide_lines(rows) -> list[float]:
    """Critical fields and the comparison field from the echoed inputs."""
    guides = set()
    for row in rows:
        if row.get("error"):
            continue
        zeta, hp, L = row["zeta"], row["h_plus"], row["L"]
        if math.isnan(zeta):
            continue
        delta = math.cosh(zeta)
        guides.add(round(delta - 1.0, 12))
        guides.add(round(-(delta - 1.0), 12))
        if not math.isnan(hp):
            guides.add(round(-hp if int(L) % 2 else hp, 12))
    return sorted(guides)


def render_overlap_figure(spec: FigureSpec) -> str:
    """Scatter/line overlap figure; returns the written path."""
    rows = load_rows(spec.csv_path, required=(spec.x_column, *spec.series))
    lengths = sorted({int(r["L"]) for r in rows if not math.isnan(r["L"])})
    with _apply_style(spec.style):
        fig, ax = plt.subplots()
        plotted = 0
        for col in spec.series:
            style = dict(SERIES_STYLE.get(col, {"linestyle": "-"}))
            base_label = style.pop("label", col)
            for L in lengths:
                sub = [r for r in rows if r["L"] == L]
                xs, ys = clean_series(sub, spec.x_column, col)
                if not xs:
                    continue
                label = base_label if col == "s_thermo" or len(lengths) == 1 \
                    else f"{base_label}, L = {L}"
                order = sorted(range(len(xs)), key=xs.__getitem__)
                xs = [xs[i] for i in order]
                ys = [ys[i] for i in order]
                ax.plot(xs, ys, **style, label=label)
                plotted += len(xs)
                if col == "s_thermo":
                    break       # the closed form is length-independent
        if plotted == 0:
            plt.close(fig)
            raise SchemaError(f"{spec.csv_path}: requested series are empty")
        xmin = min(r[spec.x_column] for r in rows if not math.isnan(r[spec.x_column]))
        xmax = max(r[spec.x_column] for r in rows if not math.isnan(r[spec.x_column]))
        for guide in (*_guide_lines(rows), *spec.vlines):
            if xmin <= guide <= xmax:
                ax.axvline(guide, linestyle="--", color="#999999", lw=0.9)
        ax.set_xlabel(spec.xlabel or spec.x_column)
        ax.set_ylabel(spec.ylabel)
        if spec.title:
            ax.set_title(spec.title)
        ax.legend(loc="best", fontsize=8)
        fig.tight_layout()
        fig.savefig(spec.out_path)
        plt.close(fig)
    return spec.out_path


def format_convergence_table(rows) -> str:
    """Appendix-style value table: one line per length."""
    lines = [f"{'L':>4s} {'s_ed':>22s} {'s_finite':>22s} {'s_thermo':>22s} "
             f"{'|s_finite - s_thermo|':>22s}"]
    for row in rows:
        if row.get("error"):
            lines.append(f"{int(row['L']):>4d}  <error: {row['error']}>")
            continue
        gap = abs(row["s_finite"] - row["s_thermo"])
        def cell(v):
            return "" if math.isnan(v) else f"{v:.15f}"
        lines.append(f"{int(row['L']):>4d} {cell(row['s_ed']):>22s} "
                     f"{cell(row['s_finite']):>22s} {cell(row['s_thermo']):>22s} "
                     f"{gap:>22.3e}")
    return "\n".join(lines)


def render_convergence_table(spec: FigureSpec) -> tuple[str, str]:
    """Log-scale gap panel plus the formatted table (written next to it)."""
    rows = load_rows(spec.csv_path, required=("L", "s_finite", "s_thermo"))
    good = [r for r in rows if not r.get("error")
            and not math.isnan(r["s_finite"]) and not math.isnan(r["s_thermo"])]
    if not good:
        raise SchemaError(f"{spec.csv_path}: no usable convergence rows")
    table = format_convergence_table(rows)
    table_path = str(Path(spec.out_path).with_suffix(".txt"))
    Path(table_path).write_text(table + "\n")

    if len(good) >= 2:
        with _apply_style(spec.style):
            fig, ax = plt.subplots()
            Ls = [int(r["L"]) for r in good]
            gaps = [abs(r["s_finite"] - r["s_thermo"]) for r in good]
            ax.semilogy(Ls, gaps, marker="o", color="#4c72b0",
                        label="|s_finite − s_thermo|")
            eds = [(int(r["L"]), abs(r["s_ed"] - r["s_thermo"])) for r in good
                   if not math.isnan(r["s_ed"])]
            if eds:
                ax.semilogy([e[0] for e in eds], [e[1] for e in eds],
                            marker="x", linestyle="none", color="#c44e52",
                            label="|s_ed − s_thermo|")
            ax.set_xlabel("L")
            ax.set_ylabel("distance to the closed form")
            ax.set_xticks(Ls)
            if spec.title:
                ax.set_title(spec.title)
            ax.legend(loc="best", fontsize=8)
            fig.tight_layout()
            fig.savefig(spec.out_path)
            plt.close(fig)
    else:
        print("single-length table: gap plot skipped")
        return table_path, table
    return spec.out_path, table
