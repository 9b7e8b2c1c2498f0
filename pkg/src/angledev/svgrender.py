"""Minimal SVG 1.1 emitter for point configurations.

Draws labeled points and, optionally, polyline chains through given index
paths (useful for highlighting the near-degenerate chains of a witness).
The y-axis is flipped so the drawing matches mathematical orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Configuration

_CHAIN_DASHES = ("6,4", "1,3", "8,2,2,2")  # dashed, dotted, dash-dot cycle


@dataclass
class RenderOptions:
    width: float = 480.0
    margin: float = 36.0
    point_radius: float = 2.5
    labels: bool = True
    label_prefix: str = "P"
    chains: list[list[int]] = field(default_factory=list)


def render_svg(config: Configuration, path, options: RenderOptions | None = None) -> None:
    """Write an SVG drawing of the configuration to path."""
    opts = options or RenderOptions()
    for chain in opts.chains:
        for i in chain:
            if i < 0 or i >= len(config):
                raise ValueError(f"chain index {i} out of range for n={len(config)}")

    xs = [p[0] for p in config]
    ys = [p[1] for p in config]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-12)
    inner = opts.width - 2.0 * opts.margin
    s = inner / span

    def to_screen(pt):
        x = opts.margin + (pt[0] - min_x) * s
        y = opts.margin + (max_y - pt[1]) * s
        return x, y

    height = 2.0 * opts.margin + (max_y - min_y) * s
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opts.width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {opts.width:.2f} {height:.2f}">',
        f'<rect width="{opts.width:.2f}" height="{height:.2f}" fill="white"/>',
    ]

    for c_idx, chain in enumerate(opts.chains):
        dash = _CHAIN_DASHES[c_idx % len(_CHAIN_DASHES)]
        coords = " ".join("{:.2f},{:.2f}".format(*to_screen(config[i])) for i in chain)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="black" '
            f'stroke-width="1" stroke-dasharray="{dash}"/>')

    for i, pt in enumerate(config):
        x, y = to_screen(pt)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{opts.point_radius}" fill="black"/>')
        if opts.labels:
            parts.append(
                f'<text x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="11" '
                f'font-family="sans-serif">{opts.label_prefix}{i}</text>')

    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
