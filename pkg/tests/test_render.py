import math
import random
import xml.etree.ElementTree as ET

import pytest

from staranagrams.classify import StarClass, classify_path
from staranagrams.core import path_steps
from staranagrams.corpus import CorpusReport, StarRecord, load_wordlist, scan
from staranagrams.numtheory import perfect_path
from staranagrams.paths import AnagramPair
from staranagrams.render import SVG_NS, FigureSpec, node_position, parse_chords, render_gallery, render_polygon


def nearest_node(pt, n, radius=1.0):
    dists = [math.dist(pt, node_position(k, n, radius)) for k in range(n)]
    k = min(range(n), key=dists.__getitem__)
    assert dists[k] < 1e-9
    return k


def chords_as_nodes(svg, n):
    return [(nearest_node(a, n), nearest_node(b, n)) for a, b in parse_chords(svg)]


def test_node_layout():
    assert node_position(0, 4) == pytest.approx((0.0, -1.0))
    assert node_position(1, 4) == pytest.approx((1.0, 0.0))  # clockwise on screen


def test_earth_hater_pentagram():
    svg = render_polygon(FigureSpec(AnagramPair("EARTH", "HATER"), (4, 1, 3, 0, 2)))
    chords = chords_as_nodes(svg, 5)
    assert {frozenset(c) for c in chords} == {frozenset(c) for c in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]}
    lengths = [math.dist(a, b) for a, b in parse_chords(svg)]
    assert max(lengths) - min(lengths) <= 1e-9 * max(lengths)


def test_triangle():
    svg = render_polygon(FigureSpec(AnagramPair("ABC", "ABC"), (0, 1, 2)))
    assert len(parse_chords(svg)) == 3


def test_step_labels():
    path = (7, 6, 3, 5, 1, 2, 0, 4)
    svg = render_polygon(FigureSpec(AnagramPair("DEANSHIP", "PINHEADS"), path, show_steps=True,
                                    show_indices=True, caption="DEANSHIP -> PINHEADS"))
    root = ET.fromstring(svg)
    labels = [int(t.text) for t in root.iter(f"{{{SVG_NS}}}text") if t.get("class") == "step"]
    assert labels == [-1, -3, 2, 4, 1, -2, 4, 3]
    assert len(parse_chords(svg)) == 8
    letters = [t.text for t in root.iter(f"{{{SVG_NS}}}text") if t.get("class") == "letter"]
    assert "".join(letters) == "DEANSHIP"


def test_chord_length_monotone_in_step():
    for n in (10, 11):
        a = node_position(0, n)
        for s in range(1, n // 2):
            assert math.dist(a, node_position(s, n)) < math.dist(a, node_position(s + 1, n))


def test_perfect_star_single_chord_length():
    for n, L in [(7, 3), (9, 4), (10, 3), (12, 5)]:
        p = perfect_path(n, L)
        svg = render_polygon(FigureSpec(AnagramPair("ABCDEFGHIJKL"[:n], "ABCDEFGHIJKL"[:n]), p))
        lengths = [math.dist(a, b) for a, b in parse_chords(svg)]
        assert max(lengths) - min(lengths) <= 1e-9 * max(lengths)


def test_spec_rejects_length_mismatch():
    with pytest.raises(ValueError):
        FigureSpec(AnagramPair("EARTH", "HATER"), (0, 1, 2))


def test_gallery_mini(tmp_path):
    report = scan(load_wordlist(b"earth\nheart\nhater\n"), autostars=False)
    files = render_gallery(report, tmp_path)
    assert len(files) == 4
    assert all(f.parent.parent.parent.name == "5" and f.parent.parent.name == "perfect" for f in files)
    assert (tmp_path / "5" / "index.html").exists()
    assert (tmp_path / "5" / "perfect" / "0" / "EARTH-HATER.svg").exists()


def test_gallery_empty(tmp_path):
    assert render_gallery(CorpusReport(), tmp_path) == []
    assert [p.name for p in tmp_path.iterdir()] == ["index.html"]


def test_gallery_single_n21(tmp_path):
    first = "ABCDEFGHIJKLMNOPQRSTU"
    path = None
    rng = random.Random(3)
    while path is None:
        p = list(range(21))
        rng.shuffle(p)
        c = classify_path(p)
        if c.star_class == StarClass.ASYMMETRIC:
            path = tuple(p)
    second = "".join(first[i] for i in path)
    rec = StarRecord(first, second, 21, "asymmetric", 1, 0, path, path_steps(path), None, "k")
    files = render_gallery(CorpusReport(anagram_count=1, stars=[rec]), tmp_path)
    assert [f.relative_to(tmp_path).parts[:3] for f in files] == [("21", "asymmetric", "0")]
