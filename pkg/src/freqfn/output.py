"""Deterministic CSV and SVG rendering for reports.

Every CSV starts with a header row, renders exact values as p/q (bare
integers allowed), and appends aggregates as trailing `# key=value`
comment lines. Floating point appears only inside SVG coordinates.
Identical inputs produce byte-identical output; nothing here reads the
clock.
"""

from __future__ import annotations

import os
from typing import Sequence

from .analysis import DiscontinuityCertificate, ScanReport
from .profile import Profile, segment_bounds
from .rational import format_rational

__all__ = [
    "emit_plot",
    "render_certificates_csv",
    "render_density_series_csv",
    "render_profile_csv",
    "render_scan_csv",
]


def render_scan_csv(report: ScanReport, header: str = "x,maximal,frequency") -> str:
    lines = [header]
    for row in report.entries:
        lines.append(",".join(format_rational(v) for v in row))
    for key, value in report.aggregates.items():
        lines.append(f"# {key}={format_rational(value)}")
    return "\n".join(lines) + "\n"


def render_profile_csv(profile: Profile) -> str:
    lines = ["segment_index,r_lo,r_hi,alpha,beta"]
    for i, ((alpha, beta), (lo, hi)) in enumerate(
        zip(profile.segments, segment_bounds(profile))
    ):
        hi_text = "inf" if hi is None else format_rational(hi)
        lines.append(
            f"{i},{format_rational(lo)},{hi_text},{format_rational(alpha)},{format_rational(beta)}"
        )
    return "\n".join(lines) + "\n"


def render_certificates_csv(certificates: Sequence[DiscontinuityCertificate]) -> str:
    lines = ["point,maximal_at,side_value,jump_lower_bound"]
    for cert in certificates:
        lines.append(
            ",".join(
                format_rational(v)
                for v in (cert.point, cert.maximal_at, cert.side_value, cert.jump_lower_bound)
            )
        )
    return "\n".join(lines) + "\n"


def render_density_series_csv(reports: Sequence[ScanReport]) -> str:
    lines = ["domain_bound,measure,density"]
    for report in reports:
        lines.append(
            ",".join(
                format_rational(v)
                for v in (
                    report.domain_bound,
                    report.aggregates["measure"],
                    report.aggregates["density"],
                )
            )
        )
    return "\n".join(lines) + "\n"


# -- SVG ----------------------------------------------------------------

_WIDTH, _HEIGHT = 640, 400
_ML, _MR, _MT, _MB = 62.0, 14.0, 14.0, 42.0
_COLORS = ("#1f77b4", "#d62728")


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _svg_document(series, x_label: str, y_label: str) -> str:
    xs = [p[0] for _, pts in series for p in pts]
    ys = [p[1] for _, pts in series for p in pts]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(0.0, min(ys)), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    y_hi += 0.05 * (y_hi - y_lo)

    plot_w = _WIDTH - _ML - _MR
    plot_h = _HEIGHT - _MT - _MB

    def sx(v: float) -> float:
        return _ML + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v: float) -> float:
        return _MT + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<line x1="{_fmt(_ML)}" y1="{_fmt(_MT)}" x2="{_fmt(_ML)}" '
        f'y2="{_fmt(_HEIGHT - _MB)}" stroke="black"/>',
        f'<line x1="{_fmt(_ML)}" y1="{_fmt(_HEIGHT - _MB)}" x2="{_fmt(_WIDTH - _MR)}" '
        f'y2="{_fmt(_HEIGHT - _MB)}" stroke="black"/>',
    ]
    for i in range(5):
        tx = x_lo + (x_hi - x_lo) * i / 4
        ty = y_lo + (y_hi - y_lo) * i / 4
        parts.append(
            f'<text x="{_fmt(sx(tx))}" y="{_fmt(_HEIGHT - _MB + 16)}" font-size="11" '
            f'text-anchor="middle">{tx:.4g}</text>'
        )
        parts.append(
            f'<text x="{_fmt(_ML - 6)}" y="{_fmt(sy(ty) + 4)}" font-size="11" '
            f'text-anchor="end">{ty:.4g}</text>'
        )
        parts.append(
            f'<line x1="{_fmt(_ML)}" y1="{_fmt(sy(ty))}" x2="{_fmt(_WIDTH - _MR)}" '
            f'y2="{_fmt(sy(ty))}" stroke="#dddddd"/>'
        )
    for idx, (name, pts) in enumerate(series):
        color = _COLORS[idx % len(_COLORS)]
        coords = " ".join(f"{_fmt(sx(px))},{_fmt(sy(py))}" for px, py in pts)
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>')
        parts.append(
            f'<text x="{_fmt(_WIDTH - _MR - 4)}" y="{_fmt(_MT + 16 + 16 * idx)}" font-size="12" '
            f'text-anchor="end" fill="{color}">{name}</text>'
        )
    parts.append(
        f'<text x="{_fmt(_ML + plot_w / 2)}" y="{_fmt(_HEIGHT - 6)}" font-size="12" '
        f'text-anchor="middle">{x_label}</text>'
    )
    parts.append(
        f'<text x="14" y="{_fmt(_MT + plot_h / 2)}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 14 {_fmt(_MT + plot_h / 2)})">{y_label}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_plot(report, path, kind: str = "line") -> None:
    """Write an SVG plot and its sibling CSV next to it.

    kind "line" takes one ScanReport and plots the maximal value and the
    frequency against x. kind "density" takes a sequence of ScanReports
    from level_density and plots density against the domain bound. The
    sibling CSV shares the SVG's stem with a .csv suffix.
    """
    path = os.fspath(path)
    if kind == "line":
        if not isinstance(report, ScanReport):
            raise TypeError("line plots take a single ScanReport")
        if not report.entries:
            raise ValueError("cannot plot an empty report")
        maximal_pts = [(float(x), float(m)) for x, m, _ in report.entries]
        frequency_pts = [(float(x), float(t)) for x, _, t in report.entries]
        svg = _svg_document(
            [("maximal", maximal_pts), ("frequency", frequency_pts)], "x", "value"
        )
        csv_text = render_scan_csv(report)
    elif kind == "density":
        reports = list(report)
        if not reports or any(not r.entries for r in reports):
            raise ValueError("cannot plot an empty report")
        pts = [(float(r.domain_bound), float(r.aggregates["density"])) for r in reports]
        svg = _svg_document([("density", pts)], "N", "density")
        csv_text = render_density_series_csv(reports)
    else:
        raise ValueError(f"unknown plot kind {kind!r}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(svg)
    stem, _ = os.path.splitext(path)
    with open(stem + ".csv", "w", encoding="utf-8") as handle:
        handle.write(csv_text)
