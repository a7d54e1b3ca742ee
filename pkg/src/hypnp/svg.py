"""Static SVG drawing of a Newton polygon over a Hodge polygon."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .hodge import Polygon

WIDTH, HEIGHT, PAD = 480, 360, 48


def _label(slope: Fraction) -> str:
    return str(slope.numerator) if slope.denominator == 1 else f"{slope.numerator}/{slope.denominator}"


def polygon_svg(newton: Polygon | None, hodge: Polygon, title: str = "") -> str:
    polys = [("hodge", hodge, "#1f77b4", "6 4")]
    if newton is not None:
        polys.append(("newton", newton, "#d62728", ""))
    xmax = max(p.rank for _, p, _, _ in polys) or 1
    ymax = max(max((y for _, y in p.vertices), default=Fraction(0)) for _, p, _, _ in polys)
    ymax = max(float(ymax), 1.0)
    sx = (WIDTH - 2 * PAD) / xmax
    sy = (HEIGHT - 2 * PAD) / ymax

    def xy(k, y):
        return PAD + k * sx, HEIGHT - PAD - float(y) * sy

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{PAD}" y1="{HEIGHT - PAD}" x2="{WIDTH - PAD}" y2="{HEIGHT - PAD}" stroke="black"/>',
        f'<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{HEIGHT - PAD}" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2}" y="20" text-anchor="middle">{escape(title)}</text>')
    for k in range(xmax + 1):
        x, y = xy(k, 0)
        out.append(f'<text x="{x:.1f}" y="{y + 16:.1f}" text-anchor="middle">{k}</text>')
    for row, (name, poly, color, dash) in enumerate(polys):
        pts = " ".join(f"{x:.1f},{y:.1f}" for x, y in (xy(k, v) for k, v in poly.break_points))
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<polyline id="{name}" points="{pts}" fill="none" stroke="{color}" '
                   f'stroke-width="2"{extra}/>')
        verts = poly.vertices
        for k, slope in enumerate(poly.slopes):
            (x0, y0), (x1, y1) = xy(*verts[k]), xy(*verts[k + 1])
            dy = -8 if name == "newton" else 14
            out.append(f'<text x="{(x0 + x1) / 2:.1f}" y="{(y0 + y1) / 2 + dy:.1f}" fill="{color}" '
                       f'text-anchor="middle">{_label(slope)}</text>')
        out.append(f'<text x="{WIDTH - PAD - 90}" y="{PAD + 16 * row}" fill="{color}">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
