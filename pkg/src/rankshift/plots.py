"""Dependency-free SVG rendering: error scatter plots per model config and
overlaid degree histograms. Output is plain XML, diffable and testable
without raster comparison."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .centrality import CentralityKind
from .experiment import TrialRecord
from .generators import ScaleFreeParams
from .graph import Graph

__all__ = ["render_scatter", "render_degree_histogram"]

PANEL_W = 320
PANEL_H = 280
MARGIN_L = 48
MARGIN_B = 40
MARGIN_T = 34
MARGIN_R = 12
SERIES = (("eps_norm", "#c0392b"), ("epsN_norm", "#2e6da4"))


def _model_label(model) -> str:
    if model is None:
        return "unknown model"
    if isinstance(model, ScaleFreeParams):
        return f"scale-free n={model.n}"
    return f"small-world n={model.n} k={model.k} p={model.p:g}"


def _panel(x0: float, y0: float, title: str,
           points: list[tuple[float, float, str]],
           x_max: float = 0.3) -> list[str]:
    """One axes box with data points; x in [0, x_max], y in [0, 1]."""
    plot_w = PANEL_W - MARGIN_L - MARGIN_R
    plot_h = PANEL_H - MARGIN_T - MARGIN_B
    left = x0 + MARGIN_L
    top = y0 + MARGIN_T

    def sx(x: float) -> float:
        return left + (x / x_max) * plot_w

    def sy(y: float) -> float:
        return top + (1.0 - y) * plot_h

    parts = [
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="white" stroke="#444" stroke-width="1"/>',
        f'<text x="{x0 + PANEL_W / 2}" y="{y0 + 20}" text-anchor="middle" '
        f'font-size="13">{escape(title)}</text>',
    ]
    for frac in (0.0, 0.5, 1.0):
        y = sy(frac)
        parts.append(f'<line x1="{left - 4}" y1="{y}" x2="{left}" y2="{y}" '
                     f'stroke="#444"/>')
        parts.append(f'<text x="{left - 7}" y="{y + 4}" text-anchor="end" '
                     f'font-size="10">{frac:g}</text>')
    for xval in (0.0, 0.1, 0.2, 0.3):
        x = sx(xval)
        bottom = top + plot_h
        parts.append(f'<line x1="{x}" y1="{bottom}" x2="{x}" y2="{bottom + 4}" '
                     f'stroke="#444"/>')
        parts.append(f'<text x="{x}" y="{bottom + 16}" text-anchor="middle" '
                     f'font-size="10">{xval:g}</text>')
    parts.append(f'<text x="{left + plot_w / 2}" y="{y0 + PANEL_H - 8}" '
                 f'text-anchor="middle" font-size="11">p_b</text>')
    for px, py, color in points:
        parts.append(f'<circle cx="{sx(px):.2f}" cy="{sy(py):.2f}" r="2.2" '
                     f'fill="{color}" fill-opacity="0.55"/>')
    return parts


def _svg_document(width: int, height: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">')
    return "\n".join([head, f'<rect width="{width}" height="{height}" '
                            'fill="#fafafa"/>'] + body + ["</svg>"])


def render_scatter(records: Sequence[TrialRecord], kind: CentralityKind,
                   path: str | Path, title: str | None = None) -> None:
    """Scatter of (p_b, eps_norm) and (p_b, epsN_norm), one panel per model
    config present in the records, at most three panels per row."""
    selected = [r for r in records if r.centrality == kind]
    if not selected:
        raise ValueError(f"no records with centrality {kind.value!r}")
    models = []
    for r in selected:
        if r.model not in models:
            models.append(r.model)
    per_row = min(3, len(models))
    rows = (len(models) + per_row - 1) // per_row
    width = per_row * PANEL_W
    height = rows * PANEL_H + 28
    body = []
    for i, model in enumerate(models):
        x0 = (i % per_row) * PANEL_W
        y0 = (i // per_row) * PANEL_H
        points = []
        for r in selected:
            if r.model != model:
                continue
            points.append((r.p_b, r.errors.epsilon_norm, SERIES[0][1]))
            points.append((r.p_b, r.errors.epsilon_n_norm, SERIES[1][1]))
        body.extend(_panel(x0, y0, _model_label(model), points))
    legend_y = rows * PANEL_H + 14
    caption = title or f"{kind.value} centrality ranking errors"
    body.append(f'<text x="8" y="{legend_y}" font-size="12">{escape(caption)}'
                f'</text>')
    lx = width - 240
    for label, color in (("eps / n", SERIES[0][1]), ("eps_N / n", SERIES[1][1])):
        body.append(f'<circle cx="{lx}" cy="{legend_y - 4}" r="4" fill="{color}"/>')
        body.append(f'<text x="{lx + 8}" y="{legend_y}" font-size="12">'
                    f'{escape(label)}</text>')
        lx += 110
    Path(path).write_text(_svg_document(width, height, body), encoding="utf-8")


def render_degree_histogram(graphs: Sequence[Graph], path: str | Path,
                            labels: Sequence[str] | None = None,
                            title: str = "degree frequency") -> None:
    """Overlaid frequency-vs-degree point series, one color per graph."""
    if not graphs:
        raise ValueError("at least one graph is required")
    palette = ("#c0392b", "#2e6da4", "#2c8a4b", "#8e5fa8", "#b8860b")
    histograms = []
    for g in graphs:
        degs = g.degrees()
        hist: dict[int, int] = {}
        for d in degs:
            hist[int(d)] = hist.get(int(d), 0) + 1
        histograms.append(hist)
    max_deg = max(max(h) for h in histograms if h)
    max_count = max(max(h.values()) for h in histograms if h)
    width, height = 640, 420
    left, right, top, bottom = 56, 16, 40, 48
    plot_w = width - left - right
    plot_h = height - top - bottom

    def sx(d: float) -> float:
        return left + (d / max(max_deg, 1)) * plot_w

    def sy(c: float) -> float:
        return top + (1.0 - c / max(max_count, 1)) * plot_h

    body = [
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="white" stroke="#444"/>',
        f'<text x="{width / 2}" y="22" text-anchor="middle" font-size="14">'
        f'{escape(title)}</text>',
        f'<text x="{left + plot_w / 2}" y="{height - 10}" text-anchor="middle" '
        f'font-size="12">degree</text>',
    ]
    for frac in (0, 0.5, 1.0):
        c = frac * max_count
        body.append(f'<text x="{left - 6}" y="{sy(c) + 4}" text-anchor="end" '
                    f'font-size="10">{int(round(c))}</text>')
    for frac in (0, 0.25, 0.5, 0.75, 1.0):
        d = frac * max_deg
        body.append(f'<text x="{sx(d)}" y="{top + plot_h + 16}" '
                    f'text-anchor="middle" font-size="10">{int(round(d))}</text>')
    for gi, hist in enumerate(histograms):
        color = palette[gi % len(palette)]
        for d in sorted(hist):
            body.append(f'<circle cx="{sx(d):.2f}" cy="{sy(hist[d]):.2f}" '
                        f'r="3" fill="{color}" fill-opacity="0.7"/>')
        label = labels[gi] if labels else f"graph {gi + 1}"
        ly = 34 + 16 * gi
        body.append(f'<circle cx="{width - 150}" cy="{ly - 4}" r="4" '
                    f'fill="{color}"/>')
        body.append(f'<text x="{width - 140}" y="{ly}" font-size="11">'
                    f'{escape(label)}</text>')
    Path(path).write_text(_svg_document(width, height, body), encoding="utf-8")
