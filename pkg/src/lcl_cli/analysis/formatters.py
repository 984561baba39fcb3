"""Output formatters for direction clouds and trace reports."""

import csv
import io
import json
from datetime import datetime
from pathlib import Path
from typing import List, Optional
from xml.sax.saxutils import escape

from mpmath import mp

from ..errors import UnsupportedDimension, UnsupportedParameter
from ..groups.moebius import is_infinite
from .models import DirectionCloud, FurstenbergSample, MoebiusFit, OnePointVerdict, TraceReport

SVG_SIZE = 800
_MARGIN = 100


def _num(x, digits: int = 15) -> str:
    return mp.nstr(x, digits)


def _point(z) -> object:
    if is_infinite(z):
        return "inf"
    z = mp.mpc(z)
    return [_num(z.real), _num(z.imag)]


class CSVFormatter:
    """word, len, l_1..l_k, dir_1..dir_k, interior."""

    def format(self, cloud: DirectionCloud) -> str:
        size = cloud.context.size
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(
            ["word", "len"]
            + [f"l_{i + 1}" for i in range(size)]
            + [f"dir_{i + 1}" for i in range(size)]
            + ["interior"]
        )
        for s in cloud.samples:
            writer.writerow(
                [s.word.format(cloud.labels or None), len(s.word)]
                + [_num(x) for x in s.lengths]
                + [_num(x) for x in s.direction.coords]
                + [int(s.interior)]
            )
        return buffer.getvalue()


class JSONFormatter:
    """Format clouds, boundary samples and verdict reports as JSON."""

    def __init__(self, timestamp: bool = False):
        self.timestamp = timestamp

    def _wrap(self, body: dict) -> str:
        if self.timestamp:
            body = {"timestamp": datetime.now().isoformat(), **body}
        return json.dumps(body, indent=2)

    def format(self, cloud: DirectionCloud) -> str:
        labels = cloud.labels or None
        return self._wrap(
            {
                "group": cloud.group_label,
                "factors": cloud.context.to_dict(),
                "max_len": cloud.max_len,
                "size": cloud.size,
                "interior": cloud.interior_count,
                "boundary": cloud.boundary_count,
                "samples": [
                    {
                        "word": s.word.format(labels),
                        "lengths": [_num(x) for x in s.lengths],
                        "direction": [_num(x) for x in s.direction.coords],
                        "interior": s.interior,
                    }
                    for s in cloud.samples
                ],
            }
        )

    def format_samples(self, samples: List[FurstenbergSample], labels: Optional[List[str]] = None) -> str:
        return self._wrap(
            {
                "samples": [
                    {"word": s.word.format(labels), "points": [_point(z) for z in s.points]}
                    for s in samples
                ]
            }
        )

    def format_trace_report(self, report: TraceReport, labels: Optional[List[str]] = None) -> str:
        return self._wrap(
            {
                "criterion": report.criterion,
                "verdict": report.verdict,
                "trace_field_degree": report.trace_field_degree,
                "totally_real": report.totally_real,
                "integral": report.integral,
                "witnesses": [
                    {"word": w.word.format(labels), "place_index": w.place_index, "abs_value": w.abs_value}
                    for w in report.witnesses
                ],
                "non_integral": [w.word.format(labels) for w in report.non_integral],
                "tested_places": report.tested_places,
                "sample_size": report.sample_size,
                "budget": report.budget,
            }
        )

    def format_verdict(self, verdict: OnePointVerdict, labels: Optional[List[str]] = None) -> str:
        return self._wrap(
            {
                "verdict": verdict.label,
                "point": [_num(x) for x in verdict.point.coords] if verdict.point else None,
                "diameter": verdict.diameter,
                "witnesses": [w.format(labels) for w in verdict.witnesses],
                "sample_size": verdict.sample_size,
            }
        )

    def format_fit(self, fit: MoebiusFit, labels: Optional[List[str]] = None) -> str:
        return self._wrap(
            {
                "anchors": [w.format(labels) for w in fit.anchors],
                "sample_size": fit.sample_size,
                "maps": [
                    {
                        "factor": m.factor,
                        "conjugated": m.conjugated,
                        "residual": m.residual,
                        "matrix": [_point(x) for x in m.matrix],
                    }
                    for m in fit.maps
                ],
            }
        )


class SVGFormatter:
    """Scatter of directions on the unit segment (two factors) or the triangle (three)."""

    def __init__(self, timestamp: bool = True):
        self.timestamp = timestamp

    def _position(self, coords) -> tuple[float, float]:
        span = SVG_SIZE - 2 * _MARGIN
        if len(coords) == 2:
            return _MARGIN + span * float(coords[1]), SVG_SIZE / 2
        x = float(coords[1]) + float(coords[2]) / 2
        y = float(coords[2]) * 3 ** 0.5 / 2
        return _MARGIN + span * x, SVG_SIZE - _MARGIN - span * y

    def format(self, cloud: DirectionCloud) -> str:
        size = cloud.context.size
        if size not in (2, 3):
            raise UnsupportedDimension(f"SVG needs 2 or 3 factors, got {size}")
        lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
            f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">'
        ]
        if self.timestamp:
            lines.append(f"<!-- generated {datetime.now().isoformat()} -->")
        lines.append(f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>')
        corners = [self._position(c) for c in ([(1, 0), (0, 1)] if size == 2 else [(1, 0, 0), (0, 1, 0), (0, 0, 1)])]
        outline = " ".join(f"{x:.2f},{y:.2f}" for x, y in corners)
        tag = "polyline" if size == 2 else "polygon"
        lines.append(f'<{tag} points="{outline}" fill="none" stroke="black" stroke-width="2"/>')
        for s in cloud.samples:
            x, y = self._position(s.direction.coords)
            color = "#1f4e9c" if s.interior else "#c23b22"
            lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{color}"/>')
        caption = escape(cloud.group_label or "direction cloud")
        lines.append(
            f'<text x="{SVG_SIZE / 2:.0f}" y="{SVG_SIZE - 30}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="18">{caption} ({cloud.size} directions, '
            f"length &lt;= {cloud.max_len})</text>"
        )
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def export(cloud: DirectionCloud, format: str, output_path: Optional[Path] = None, timestamp: bool = True) -> str:
    """Render a cloud as csv, json or svg; write it when a path is given."""
    if format == "csv":
        content = CSVFormatter().format(cloud)
    elif format == "json":
        content = JSONFormatter(timestamp=False).format(cloud)
    elif format == "svg":
        content = SVGFormatter(timestamp=timestamp).format(cloud)
    else:
        raise UnsupportedParameter(f"unknown format {format!r} (choose from csv, json, svg)")
    if output_path is not None:
        save_report(content, format, output_path)
    return content


def save_report(content: str, format: str, output_path: Optional[Path] = None) -> Path:
    """Save report to file."""
    if output_path is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        output_path = Path.cwd() / f"lcl_report_{timestamp}.{format}"

    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(content, encoding="utf-8")
    return output_path
