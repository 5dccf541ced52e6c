"""SVG pictures of a rank-2 apartment: walls, the alcove, strips and orbit points."""
from __future__ import annotations

from fractions import Fraction as Q
from math import sqrt
from typing import Iterable, Sequence

from .errors import CapabilityError, InputError
from .roots import RootSystem

SIZE = 600
COLORS = {"survivor": "#c00000", "empty": "#7f7f7f", "exceptional": "#1f4fbf"}


class Frame:
    """Euclidean picture of value coordinates, scaled into the SVG box."""

    def __init__(self, rs: RootSystem, extent: float):
        if rs.rank != 2:
            raise CapabilityError(f"plots need rank 2, got {rs.name}")
        g = [[float(rs.form(rs.simple(i), rs.simple(j))) for j in range(2)] for i in range(2)]
        # simple roots as plane vectors with the right Gram matrix
        a1 = (sqrt(g[0][0]), 0.0)
        c = g[0][1] / a1[0]
        a2 = (c, sqrt(g[1][1] - c * c))
        self.alpha = (a1, a2)
        self.rs = rs
        self.scale = SIZE / (2 * extent)

    def plane(self, x: Sequence) -> tuple[float, float]:
        """Plane vector v with alpha_i . v = x_i."""
        (p, q), (r, s) = self.alpha
        b1, b2 = float(x[0]), float(x[1])
        det = p * s - q * r
        return ((b1 * s - q * b2) / det, (p * b2 - r * b1) / det)

    def svg(self, v: tuple[float, float]) -> tuple[float, float]:
        return (SIZE / 2 + v[0] * self.scale, SIZE / 2 - v[1] * self.scale)

    def normal(self, root: Sequence[int]) -> tuple[float, float]:
        """n with <root, x> = n . v."""
        return tuple(sum(c * a[t] for c, a in zip(root, self.alpha)) for t in range(2))


def _f(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _clip(poly: list, n, lo: float, hi: float) -> list:
    """Intersect a polygon with lo <= n . v <= hi."""
    def cut(pts, sign, bound):
        out = []
        m = len(pts)
        for i in range(m):
            a, b = pts[i], pts[(i + 1) % m]
            fa = sign * (n[0] * a[0] + n[1] * a[1] - bound)
            fb = sign * (n[0] * b[0] + n[1] * b[1] - bound)
            if fa >= 0:
                out.append(a)
            if (fa >= 0) != (fb >= 0):
                t = fa / (fa - fb)
                out.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
        return out
    return cut(cut(poly, 1, lo), -1, hi)


def render(rs: RootSystem, N: int = 2, points: Iterable = (), strips: Iterable = (), extent: float = 0.0,
           title: str = "") -> str:
    """SVG text. ``points`` holds (y, kind) pairs with kind a key of COLORS."""
    if N < 0:
        raise InputError("N must be nonnegative")
    points = list(points)
    strips = list(strips)
    fr0 = Frame(rs, 1.0)
    if not extent:
        reach = [max(abs(c) for c in fr0.plane(y)) for y, _ in points] or [0.0]
        extent = max(1.5, max(reach) * 1.15)
    fr = Frame(rs, extent)
    box = [(-extent, -extent), (extent, -extent), (extent, extent), (-extent, extent)]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title or rs.name + ' apartment'}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]

    def polygon(pts, style):
        coords = " ".join(f"{_f(a)},{_f(b)}" for a, b in (fr.svg(p) for p in pts))
        out.append(f'<polygon points="{coords}" {style}/>')

    # strips first so walls draw over them
    for s in strips:
        piece = _clip(box, fr.normal(s.root), float(s.lo), float(s.hi))
        if len(piece) >= 3:
            polygon(piece, 'fill="#f4c7c3" stroke="#c00000" stroke-width="2"')

    theta = rs.highest_root
    verts = [(Q(0), Q(0))] + [tuple(Q(1, theta[i]) if j == i else Q(0) for j in range(2)) for i in range(2)]
    polygon([fr.plane(v) for v in verts], 'fill="#c8c8c8" stroke="none"')

    for r in rs.positive_roots:
        n = fr.normal(r)
        norm2 = n[0] ** 2 + n[1] ** 2
        for level in range(-N, N + 1):
            c = -level  # <r, x> + level = 0
            base = (n[0] * c / norm2, n[1] * c / norm2)
            d = (-n[1], n[0])
            L = 4 * extent / sqrt(norm2)
            p, q = fr.svg((base[0] - L * d[0], base[1] - L * d[1])), fr.svg((base[0] + L * d[0], base[1] + L * d[1]))
            width = "1.5" if level == 0 else "0.7"
            out.append(f'<line x1="{_f(p[0])}" y1="{_f(p[1])}" x2="{_f(q[0])}" y2="{_f(q[1])}" '
                       f'stroke="black" stroke-width="{width}"/>')

    for y, kind in sorted(points, key=lambda t: (t[1], t[0])):
        cx, cy = fr.svg(fr.plane(y))
        out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="3.5" fill="{COLORS.get(kind, "black")}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
