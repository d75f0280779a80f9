"""Deterministic SVG output for the nested triangles of a bryophyllum."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .canonical import CanonicalBryophyllum
from .conformal import Arc, Line, _orientation
from .dynamics import CurvilinearTriangle, triangle_levels

MAX_RENDER_DEPTH = 16
MIN_WIDTH, MAX_WIDTH = 64, 8192
BBOX_SAMPLES = 257
MARGIN = 0.05


@dataclass(frozen=True)
class RenderSpec:
    phi: float
    psi: float
    depth: int = 6
    width_px: int = 800
    stroke: str = "#1f3a5f"
    fill: str = "none"
    stroke_width: float = 1.0

    def __post_init__(self):
        if not 0 <= self.depth <= MAX_RENDER_DEPTH:
            raise ValueError(f"depth must be in [0, {MAX_RENDER_DEPTH}], got {self.depth}")
        if not MIN_WIDTH <= self.width_px <= MAX_WIDTH:
            raise ValueError(f"width must be in [{MIN_WIDTH}, {MAX_WIDTH}], got {self.width_px}")


def _num(x: float) -> str:
    s = "%.6f" % x
    return "0.000000" if s == "-0.000000" else s


class _Frame:
    """Maps the plane to pixels with the imaginary axis pointing up."""

    def __init__(self, b: CanonicalBryophyllum, width: int):
        pts = list(b.vertices)
        for edge in (b.splus, b.sminus, b.s0):
            pts.extend(edge.sample(BBOX_SAMPLES))
        xs = [z.real for z in pts]
        ys = [z.imag for z in pts]
        pad = MARGIN * max(max(xs) - min(xs), max(ys) - min(ys))
        self.xmin, self.xmax = min(xs) - pad, max(xs) + pad
        self.ymin, self.ymax = min(ys) - pad, max(ys) + pad
        self.scale = width / (self.xmax - self.xmin)
        self.width = width
        self.height = max(1, round((self.ymax - self.ymin) * self.scale))

    def xy(self, z: complex) -> str:
        return f"{_num((z.real - self.xmin) * self.scale)},{_num((self.ymax - z.imag) * self.scale)}"


def _edge_command(frame: _Frame, arc: Arc) -> str:
    c = arc.circline()
    if isinstance(c, Line):
        return f"L {frame.xy(arc.end)}"
    rad = _num(c.radius * frame.scale)
    large = 1 if arc.large_arc() else 0
    # a counterclockwise arc in the plane is counterclockwise on screen too,
    # which SVG calls the negative sweep
    sweep = 0 if _orientation(arc.start, arc.mid, arc.end) > 0 else 1
    return f"A {rad} {rad} 0 {large} {sweep} {frame.xy(arc.end)}"


def triangle_path(frame: _Frame, t: CurvilinearTriangle) -> str:
    """Closed outline A0 -> A+ -> A- -> A0 along the edge images."""
    splus, sminus, s0 = t.edges
    loop = (splus.reversed(), s0, sminus)
    parts = [f"M {frame.xy(t.vertices[0])}"]
    parts.extend(_edge_command(frame, a) for a in loop)
    parts.append("Z")
    return " ".join(parts)


def render_svg(b: CanonicalBryophyllum, spec: RenderSpec) -> str:
    """One path per triangle of depth 0..spec.depth, ordered by depth then word."""
    frame = _Frame(b, spec.width_px)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{frame.width}" '
        f'height="{frame.height}" viewBox="0 0 {frame.width} {frame.height}">',
        f"<title>Br({_num(b.phi)}, {_num(b.psi)}) depth {spec.depth}</title>",
        f'<g fill={quoteattr(spec.fill)} stroke={quoteattr(spec.stroke)} '
        f'stroke-linejoin="round">',
    ]
    for depth, level in enumerate(triangle_levels(b, spec.depth)):
        width = _num(spec.stroke_width / (1 + depth) ** 0.5)
        for t in level:
            word = "".join(map(str, t.word))
            lines.append(f'<path data-word="{word}" stroke-width="{width}" '
                         f'd="{triangle_path(frame, t)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
