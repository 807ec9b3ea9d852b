"""Exact JSON-Lines interchange and SVG rendering of circle lists.

Floating point appears only here, when SVG coordinates are written out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import IO, Iterable

from .circles import Circle, EuclidCircle, euclid_params
from .explorer import Window
from .gaussian import GaussInt

# -- JSON Lines ------------------------------------------------------------------


def circle_to_json(c: Circle) -> str:
    return json.dumps({"b": c.b, "bp": c.bp, "zre": c.z.re, "zim": c.z.im})


def circle_from_json(line: str) -> Circle:
    d = json.loads(line)
    fields = {k: d[k] for k in ("b", "bp", "zre", "zim")}
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in fields.values()):
        raise ValueError(f"circle fields must be integers: {line!r}")
    return Circle(fields["b"], fields["bp"], GaussInt(fields["zre"], fields["zim"]))


def write_jsonl(circles: Iterable[Circle], fh: IO[str]) -> None:
    for c in circles:
        fh.write(circle_to_json(c) + "\n")


def read_jsonl(fh: IO[str]) -> list[Circle]:
    return [circle_from_json(line) for line in fh if line.strip()]


# -- SVG -------------------------------------------------------------------------


class Labels(Enum):
    NONE = "none"
    CURVATURE = "curvature"
    HALF = "half"


@dataclass(frozen=True)
class RenderSpec:
    window: Window
    scale: int = 400
    stroke: float = 1.0
    labels: Labels = Labels.NONE

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.stroke <= 0:
            raise ValueError("stroke must be positive")


POSITIVE_STROKE = "#1f3b73"
NEGATIVE_STROKE = "#b03a2e"


def _f(x: Fraction | float) -> str:
    return f"{float(x):.6f}"


def emit_svg(circles: Iterable[Circle], spec: RenderSpec) -> str:
    """One ``circle`` per finite circle and one ``line`` per line meeting the
    window, in the order given; the view is clipped to the window."""
    win, s = spec.window, spec.scale
    width, height = (win.x1 - win.x0) * s, (win.y1 - win.y0) * s

    def px(x: Fraction) -> str:
        return _f((x - win.x0) * s)

    def py(y: Fraction) -> str:
        return _f((win.y1 - y) * s)

    body = []
    labels = []
    for c in circles:
        colour = NEGATIVE_STROKE if c.b < 0 else POSITIVE_STROKE
        style = f'stroke="{colour}" stroke-width="{_f(spec.stroke)}" fill="none"'
        if c.b < 0:
            style += ' stroke-dasharray="4 2"'
        geom = euclid_params(c)
        if isinstance(geom, EuclidCircle):
            cx, cy = geom.centre
            body.append(f'<circle cx="{px(cx)}" cy="{py(cy)}" r="{_f(geom.radius * s)}" {style}/>')
            if spec.labels is not Labels.NONE:
                value = c.b if spec.labels is Labels.CURVATURE else c.b // 2
                size = _f(min(geom.radius * s, Fraction(s, 8)) / 2)
                labels.append(
                    f'<text x="{px(cx)}" y="{py(cy)}" font-size="{size}" '
                    f'text-anchor="middle" dominant-baseline="central">{value}</text>'
                )
            continue
        (nx, ny), offset = geom.normal, geom.offset
        if ny:  # horizontal line y = offset / ny
            y = offset / ny
            if win.y0 <= y <= win.y1:
                body.append(f'<line x1="{px(win.x0)}" y1="{py(y)}" x2="{px(win.x1)}" y2="{py(y)}" {style}/>')
        else:  # vertical line x = offset / nx
            x = offset / nx
            if win.x0 <= x <= win.x1:
                body.append(f'<line x1="{px(x)}" y1="{py(win.y0)}" x2="{px(x)}" y2="{py(win.y1)}" {style}/>')

    w, h = _f(width), _f(height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<defs><clipPath id="window"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>',
        '<g clip-path="url(#window)">',
        *body,
        *labels,
        "</g>",
        "</svg>",
    ]
    return "\n".join(out) + "\n"
