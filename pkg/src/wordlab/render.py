"""Deterministic text and SVG drawings.

Broken-line pictures of binary words with optional shading of the cells
left ('.') and right (':') of the line, the diagonal picture whose two
region areas are the sums of b-positions of the word and of its reverse
(each minus |w|_b/2), Ferrers diagrams, and DOT exports of class graphs.
All emitters are pure and byte-stable for fixed inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .lattice import ClassGraph
from .words import Word, _binary_word, _row_widths, sum_positions

__all__ = [
    "render_line",
    "render_diagonal",
    "render_ferrers",
    "render_class_dot",
]

_UNIT = 24  # SVG pixels per grid square
_LEFT_FILL = "#c8c8c8"
_RIGHT_FILL = "#ebebeb"


def _ascii_line_frame(s: str, shade_rows: int | None, shade: str) -> list[str]:
    """Character grid of the broken line of s.

    One text line per height level, top line first; '_' marks a step
    right along that level, '|' a step up through the line's band.  With
    shading, cell slots show '.' (left of the line) or ':' (right); a
    shaded slot hides the path mark sharing it.  ``shade_rows`` limits
    '.' shading to the bottommost rows (None shades all).
    """
    na = s.count("a")
    nb = s.count("b")
    widths = _row_widths(s)  # a's before the j-th b
    heights = []  # b's before the i-th a
    seen_b = 0
    for ch in s:
        if ch == "b":
            seen_b += 1
        else:
            heights.append(seen_b)
    verticals = {(widths[j - 1], j) for j in range(1, nb + 1)}
    lines = []
    for t in range(nb + 1):
        level = nb - t
        row = level + 1  # cells drawn in this text line
        chars = []
        for i in range(na + 1):
            chars.append("|" if (i, row) in verticals else " ")
            if i == na:
                break
            cell = " "
            col = i + 1
            if shade != "none" and 1 <= row <= nb:
                if col <= widths[row - 1]:
                    if shade == "left_right" or (
                        shade_rows is not None and row <= shade_rows
                    ):
                        cell = "."
                elif shade == "left_right":
                    cell = ":"
            if cell == " " and heights[col - 1] == level:
                cell = "_"
            chars.append(cell)
        lines.append("".join(chars).rstrip())
    return lines


def render_line(w, style: str = "ascii", shade: str = "none") -> str:
    """Draw the broken line of a binary word.

    style "ascii" or "svg"; shade "none", "left_right" (both regions)
    or "steps" (one frame per b, shading the rows counted so far).
    """
    w = _binary_word(w)
    if style not in ("ascii", "svg"):
        raise DomainError(f"unknown style {style!r}")
    if shade not in ("none", "left_right", "steps"):
        raise DomainError(f"unknown shading {shade!r}")
    s = str(w)
    nb = s.count("b")
    if style == "ascii":
        if shade == "steps" and nb > 0:
            widths = _row_widths(s)
            frames = []
            total = 0
            for j in range(1, nb + 1):
                total += widths[j - 1]
                frames.append(
                    f"step {j}: row {j} adds {widths[j - 1]} (total {total})"
                )
                frames.extend(_ascii_line_frame(s, j, "steps"))
                frames.append("")
            return "\n".join(frames[:-1])
        return "\n".join(_ascii_line_frame(s, None, shade))
    return _svg_line(s, shade)


def _svg_header(width_px: int, height_px: int) -> list[str]:
    return [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width_px}" height="{height_px}" '
        f'viewBox="0 0 {width_px} {height_px}">',
    ]


def _svg_line(s: str, shade: str) -> str:
    na = s.count("a")
    nb = s.count("b")
    widths = _row_widths(s)
    pad = _UNIT // 2
    frame_h = nb * _UNIT + 2 * pad
    if shade == "steps" and nb > 0:
        frames = list(range(1, nb + 1))
    else:
        frames = [None]
    width_px = na * _UNIT + 2 * pad
    height_px = frame_h * len(frames)
    out = _svg_header(width_px, height_px)

    for frame_idx, upto_row in enumerate(frames):
        top = frame_idx * frame_h

        def px(x: float, y: float) -> tuple[float, float]:
            return pad + x * _UNIT, top + pad + (nb - y) * _UNIT

        for j in range(1, nb + 1):
            for i in range(1, na + 1):
                left = i <= widths[j - 1]
                if shade == "none":
                    continue
                if upto_row is not None and not (left and j <= upto_row):
                    continue
                x, y = px(i - 1, j)
                fill = _LEFT_FILL if left else _RIGHT_FILL
                out.append(
                    f'<rect x="{x:g}" y="{y:g}" width="{_UNIT}" height="{_UNIT}" '
                    f'fill="{fill}"/>'
                )
        x = y = 0
        for ch in s:
            if ch == "a":
                x0, y0 = px(x, y)
                x1, y1 = px(x + 1, y)
                out.append(
                    f'<line x1="{x0:g}" y1="{y0:g}" x2="{x1:g}" y2="{y1:g}" '
                    'stroke="red" stroke-width="2"/>'
                )
                x += 1
            else:
                x0, y0 = px(x, y)
                x1, y1 = px(x, y + 1)
                out.append(
                    f'<line x1="{x0:g}" y1="{y0:g}" x2="{x1:g}" y2="{y1:g}" '
                    'stroke="blue" stroke-width="2"/>'
                )
                y += 1
    out.append("</svg>")
    return "\n".join(out)


def _format_half(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_diagonal(w, style: str = "ascii") -> str:
    """Draw a binary word with b as a unit diagonal step.

    The picture sits in a |w| x |w|_b rectangle; the regions left and
    right of the path have exact areas S_b(w) - |w|_b/2 and
    S_b(reverse) - |w|_b/2, reported in the annotation.
    """
    w = _binary_word(w)
    if style not in ("ascii", "svg"):
        raise DomainError(f"unknown style {style!r}")
    s = str(w)
    n = len(s)
    nb = s.count("b")
    s_b = sum_positions(w, "b")
    left_area = Fraction(2 * s_b - nb, 2)
    right_area = Fraction(2 * (nb * (n + 1) - s_b) - nb, 2)
    note = f"left area = {_format_half(left_area)}, right area = {_format_half(right_area)}"

    if style == "ascii":
        lines = []
        levels = []  # path height before each step
        y = 0
        for ch in s:
            levels.append(y)
            if ch == "b":
                y += 1
        for t in range(nb + 1):
            level = nb - t
            chars = []
            for c in range(n):
                if s[c] == "a" and levels[c] == level:
                    chars.append("_")
                elif s[c] == "b" and levels[c] == level - 1:
                    chars.append("/")
                else:
                    chars.append(" ")
            lines.append("".join(chars).rstrip())
        lines.append(note)
        return "\n".join(lines)

    pad = _UNIT // 2
    width_px = n * _UNIT + 2 * pad
    height_px = nb * _UNIT + 2 * pad + _UNIT

    def px(x: float, y: float) -> tuple[float, float]:
        return pad + x * _UNIT, pad + (nb - y) * _UNIT

    out = _svg_header(width_px, height_px)
    x0, y0 = px(0, 0)
    x1, y1 = px(n, nb)
    out.append(
        f'<rect x="{min(x0, x1):g}" y="{min(y0, y1):g}" '
        f'width="{abs(x1 - x0):g}" height="{abs(y0 - y1):g}" '
        'fill="none" stroke="black"/>'
    )
    x = y = 0
    for ch in s:
        if ch == "a":
            ax0, ay0 = px(x, y)
            ax1, ay1 = px(x + 1, y)
            out.append(
                f'<line x1="{ax0:g}" y1="{ay0:g}" x2="{ax1:g}" y2="{ay1:g}" '
                'stroke="red" stroke-width="2"/>'
            )
        else:
            ax0, ay0 = px(x, y)
            ax1, ay1 = px(x + 1, y + 1)
            out.append(
                f'<line x1="{ax0:g}" y1="{ay0:g}" x2="{ax1:g}" y2="{ay1:g}" '
                'stroke="blue" stroke-width="2"/>'
            )
            y += 1
        x += 1
    tx, ty = pad, nb * _UNIT + 2 * pad + _UNIT // 2
    out.append(f'<text x="{tx}" y="{ty}" font-size="12">{note}</text>')
    out.append("</svg>")
    return "\n".join(out)


def render_ferrers(parts: Sequence[int]) -> str:
    """Ferrers diagram, one row of '#' per part; zero parts are omitted."""
    parts = tuple(int(p) for p in parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(
        p < 0 for p in parts
    ):
        raise DomainError(f"parts must be non-increasing and nonnegative: {parts}")
    return "\n".join("#" * p for p in parts if p > 0)


def render_class_dot(graph: ClassGraph) -> str:
    """DOT digraph of a class graph: one node per word, one edge per pair.

    Node and edge order follow the graph's (lexicographic) ordering, so
    the output is stable.
    """
    sig = graph.signature
    out = [f"digraph class_{sig.na}_{sig.nb}_{sig.m} {{"]
    for node in graph.nodes:
        out.append(f'  "{node}";')
    for u, v in graph.edges:
        out.append(f'  "{u}" -> "{v}";')
    out.append("}")
    return "\n".join(out)
