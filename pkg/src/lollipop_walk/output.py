"""Deterministic CSV/JSON/SVG emission for run artifacts.

All writers format floats explicitly and emit "\n" newlines so repeated
runs with the same inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .observables import PositionDistribution, SummaryRecord

# sites with probability at or below this are cut from half-line output
PRINT_FLOOR = 1e-15


def format_probability(p: float) -> str:
    """10 significant digits, no trailing noise."""
    return f"{p:.10g}"


def halfline_cutoff(halfline_probs: np.ndarray) -> int:
    """Largest half-line site with probability above the print floor (0 if none)."""
    above = np.nonzero(halfline_probs > PRINT_FLOOR)[0]
    return int(above[-1]) if above.size else 0


def distribution_rows(dist: PositionDistribution):
    """(region, site, probability) rows: cycle ascending, then half-line."""
    for k, p in enumerate(dist.cycle_probs):
        yield "cycle", k, float(p)
    for x in range(1, halfline_cutoff(dist.halfline_probs) + 1):
        yield "halfline", x, float(dist.halfline_probs[x])


def write_distribution_csv(path: Path, dist: PositionDistribution) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("region,site,probability\n")
        for region, site, p in distribution_rows(dist):
            fh.write(f"{region},{site},{format_probability(p)}\n")


def write_distribution_json(path: Path, dist: PositionDistribution) -> None:
    cutoff = halfline_cutoff(dist.halfline_probs)
    payload = {
        "time": dist.time,
        "source": dist.source,
        "cycle": [float(p) for p in dist.cycle_probs],
        "halfline": {
            "first_site": 1,
            "probabilities": [float(p) for p in dist.halfline_probs[1 : cutoff + 1]],
        },
    }
    _write_json(path, payload)


def _record_dict(rec: SummaryRecord) -> dict:
    return {
        "time": rec.time,
        "cycle_total": rec.cycle_total,
        "halfline_total": rec.halfline_total,
        "spike_site": rec.spike_site,
        "spike_height": rec.spike_height,
        "halfline_mean": rec.halfline_mean,
        "halfline_std": rec.halfline_std,
    }


SUMMARY_HEADER = (
    "time,cycle_total,halfline_total,spike_site,spike_height,halfline_mean,halfline_std"
)


def write_summary_csv(path: Path, records: list[SummaryRecord]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(SUMMARY_HEADER + "\n")
        for r in records:
            mean = "" if r.halfline_mean is None else format_probability(r.halfline_mean)
            std = "" if r.halfline_std is None else format_probability(r.halfline_std)
            fh.write(
                f"{r.time},{format_probability(r.cycle_total)},"
                f"{format_probability(r.halfline_total)},{r.spike_site},"
                f"{format_probability(r.spike_height)},{mean},{std}\n"
            )


def write_summary_json(path: Path, records: list[SummaryRecord]) -> None:
    _write_json(path, {"summaries": [_record_dict(r) for r in records]})


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


# --- SVG ------------------------------------------------------------------

WIDTH, HEIGHT = 800, 500
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 60, 20, 40, 45


def _svg_open(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
    ]


def _axes(parts: list[str], y_label: str, x_label: str) -> None:
    x0, y0 = MARGIN_LEFT, HEIGHT - MARGIN_BOTTOM
    x1, y1 = WIDTH - MARGIN_RIGHT, MARGIN_TOP
    parts.append(
        f'<polyline points="{x0},{y1} {x0},{y0} {x1},{y0}" fill="none" '
        f'stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{(x0 + x1) / 2:.0f}" y="{HEIGHT - 8}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{x_label}</text>'
    )
    parts.append(
        f'<text x="16" y="{(y0 + y1) / 2:.0f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 16 {(y0 + y1) / 2:.0f})">{y_label}</text>'
    )


def _y_scale_label(parts: list[str], top: float) -> None:
    parts.append(
        f'<text x="{MARGIN_LEFT - 6}" y="{MARGIN_TOP + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{top:.3g}</text>'
    )
    parts.append(
        f'<text x="{MARGIN_LEFT - 6}" y="{HEIGHT - MARGIN_BOTTOM + 4}" '
        f'text-anchor="end" font-family="sans-serif" font-size="11">0</text>'
    )


def render_cycle_svg(dist: PositionDistribution) -> str:
    """Bar profile of the cycle probabilities."""
    probs = dist.cycle_probs
    top = max(float(probs.max()), PRINT_FLOOR)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    n = probs.size
    parts = _svg_open(f"cycle profile, {dist.source} walk, t={dist.time}")
    _axes(parts, "probability", "cycle node")
    _y_scale_label(parts, top)
    slot = plot_w / n
    bar_w = max(slot * 0.8, 1.0)
    for k, p in enumerate(probs):
        h = plot_h * float(p) / top
        x = MARGIN_LEFT + slot * k + (slot - bar_w) / 2
        y = HEIGHT - MARGIN_BOTTOM - h
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar_w:.2f}" height="{h:.2f}" '
            f'fill="steelblue"/>'
        )
        if n <= 40 and k % max(1, n // 25) == 0:
            parts.append(
                f'<text x="{x + bar_w / 2:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 14}" '
                f'text-anchor="middle" font-family="sans-serif" font-size="10">{k}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_halfline_svg(dist: PositionDistribution) -> str:
    """Polyline profile of the half-line probabilities out to the print floor."""
    cutoff = halfline_cutoff(dist.halfline_probs)
    probs = dist.halfline_probs[1 : cutoff + 1]
    parts = _svg_open(f"half-line profile, {dist.source} walk, t={dist.time}")
    _axes(parts, "probability", "half-line site")
    if probs.size == 0:
        parts.append(
            f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT / 2:.0f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">no probability above '
            f"{PRINT_FLOOR:g}</text>"
        )
        parts.append("</svg>")
        return "\n".join(parts) + "\n"
    top = max(float(probs.max()), PRINT_FLOOR)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    _y_scale_label(parts, top)
    span = max(cutoff - 1, 1)
    points = []
    for i, p in enumerate(probs):
        x = MARGIN_LEFT + plot_w * i / span
        y = HEIGHT - MARGIN_BOTTOM - plot_h * float(p) / top
        points.append(f"{x:.2f},{y:.2f}")
    parts.append(
        f'<polyline points="{" ".join(points)}" fill="none" stroke="firebrick" '
        f'stroke-width="1"/>'
    )
    for frac in (0.0, 0.5, 1.0):
        site = 1 + round(span * frac)
        x = MARGIN_LEFT + plot_w * frac
        parts.append(
            f'<text x="{x:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 14}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{site}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path: Path, content: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(content)
