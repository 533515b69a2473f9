"""SVG figures of anagram polygons and gallery trees of a corpus report."""

from __future__ import annotations

import math
import os
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Optional, Sequence

from .core import path_steps, validate_path
from .paths import AnagramPair

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class FigureSpec:
    pair: AnagramPair
    path: tuple[int, ...]
    show_steps: bool = False
    show_indices: bool = False
    caption: Optional[str] = None
    radius: float = 1.0
    font_size: float = 0.16

    def __post_init__(self):
        validate_path(self.path)
        if len(self.path) != len(self.pair):
            raise ValueError("path length differs from word length")


def node_position(k: int, n: int, radius: float = 1.0) -> tuple[float, float]:
    """SVG coordinates of node k: node 0 at the top, increasing clockwise."""
    theta = math.radians(90.0 - k * 360.0 / n)
    # SVG y grows downward
    return radius * math.cos(theta), -radius * math.sin(theta)


def _fmt(x: float) -> str:
    x = round(x, 12)
    return "0" if x == 0 else repr(x)


def render_polygon(spec: FigureSpec) -> str:
    n, r, fs = len(spec.path), spec.radius, spec.font_size
    margin = r * 0.45
    extent = r + margin
    height = 2 * extent + (fs * 1.6 if spec.caption else 0)
    svg = ET.Element("svg", {
        "xmlns": SVG_NS,
        "viewBox": f"{_fmt(-extent)} {_fmt(-extent)} {_fmt(2 * extent)} {_fmt(height)}",
        "width": "320",
        "height": str(round(320 * height / (2 * extent))),
        "data-first": spec.pair.first,
        "data-second": spec.pair.second,
    })
    ET.SubElement(svg, "circle", {
        "class": "ring", "cx": "0", "cy": "0", "r": _fmt(r),
        "fill": "none", "stroke": "#ccc", "stroke-width": _fmt(r * 0.01),
    })

    chords = ET.SubElement(svg, "g", {"class": "chords", "stroke": "black",
                                      "stroke-width": _fmt(r * 0.015)})
    steps = path_steps(spec.path)
    for i, a in enumerate(spec.path):
        b = spec.path[(i + 1) % n]
        (x1, y1), (x2, y2) = node_position(a, n, r), node_position(b, n, r)
        ET.SubElement(chords, "line", {
            "class": "chord", "data-from": str(a), "data-to": str(b), "data-step": str(steps[i]),
            "x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2),
        })
        if spec.show_steps:
            t = ET.SubElement(svg, "text", {
                "class": "step", "x": _fmt((x1 + x2) / 2), "y": _fmt((y1 + y2) / 2),
                "font-size": _fmt(fs * 0.8), "fill": "blue", "text-anchor": "middle",
            })
            t.text = str(steps[i])

    labels = ET.SubElement(svg, "g", {"class": "letters", "font-size": _fmt(fs),
                                      "text-anchor": "middle", "dominant-baseline": "middle"})
    for k, letter in enumerate(spec.pair.first):
        x, y = node_position(k, n, r * 1.2)
        t = ET.SubElement(labels, "text", {"class": "letter", "x": _fmt(x), "y": _fmt(y)})
        t.text = letter
        if spec.show_indices:
            x, y = node_position(k, n, r * 1.36)
            t = ET.SubElement(labels, "text", {"class": "index", "x": _fmt(x), "y": _fmt(y),
                                               "font-size": _fmt(fs * 0.6)})
            t.text = str(k)
    if spec.caption:
        t = ET.SubElement(svg, "text", {"class": "caption", "x": "0",
                                        "y": _fmt(extent + fs * 0.9), "font-size": _fmt(fs),
                                        "text-anchor": "middle"})
        t.text = spec.caption
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def parse_chords(svg_text: str) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Chord endpoints of a figure, in drawing order."""
    root = ET.fromstring(svg_text)
    out = []
    for line in root.iter(f"{{{SVG_NS}}}line"):
        if line.get("class") == "chord":
            out.append(((float(line.get("x1")), float(line.get("y1"))),
                        (float(line.get("x2")), float(line.get("y2")))))
    return out


def _index_html(title: str, entries: Sequence[tuple[str, str]]) -> str:
    items = "\n".join(f'<li><a href="{href}">{label}</a></li>' for href, label in entries)
    return (f"<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>{title}</title></head>\n"
            f"<body><h1>{title}</h1>\n<ul>\n{items}\n</ul></body></html>\n")


def render_gallery(report, out_dir: str | os.PathLike) -> list[FsPath]:
    """Write ``<out>/<N>/<class>/<cluster>/<w1>-<w2>.svg`` plus index pages."""
    out = FsPath(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[FsPath] = []
    per_n: dict[int, list[tuple[str, str]]] = {}
    for (n, label), clusters in report.clusters().items():
        for idx, (_key, members) in enumerate(clusters):
            folder = out / str(n) / label / str(idx)
            folder.mkdir(parents=True, exist_ok=True)
            for m in members:
                spec = FigureSpec(AnagramPair(m.first, m.second), m.path, show_steps=True,
                                  caption=f"{m.first} → {m.second}")
                target = folder / f"{m.first}-{m.second}.svg"
                target.write_text(render_polygon(spec))
                written.append(target)
                per_n.setdefault(n, []).append(
                    (f"{label}/{idx}/{target.name}", f"{label} cluster {idx}: {m.first} → {m.second}"))
    for n, entries in sorted(per_n.items()):
        (out / str(n) / "index.html").write_text(_index_html(f"Star anagrams N={n}", entries))
    (out / "index.html").write_text(
        _index_html("Star anagrams", [(f"{n}/index.html", f"N={n}") for n in sorted(per_n)]))
    return written
