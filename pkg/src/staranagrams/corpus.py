"""Wordlist ingestion, anagram discovery and the corpus-wide star census."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import unicodedata
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import BinaryIO, Optional, Union

from .classify import (
    MIN_STAR_LENGTH,
    Classification,
    StarClass,
    classify_anagram,
    select_best,
    star_path_classifications,
)
from .core import canonical_shape_key, edge_matrix, path_steps
from .errors import PathCountExceeded, StarAnagramError
from .numtheory import modular_inverse
from .paths import AnagramPair, count_paths, reverse_path

log = logging.getLogger(__name__)

DEFAULT_CAP = 3_000_000
STAR_CLASSES = (StarClass.ASYMMETRIC, StarClass.SYMMETRIC, StarClass.PERFECT)
REPORT_FORMAT_VERSION = 1


class EmptyWordListError(StarAnagramError):
    pass


@dataclass(frozen=True)
class WordList:
    words: frozenset[str]
    source: Optional[str] = None
    lines_read: int = 0

    def __len__(self):
        return len(self.words)


def normalize_word(raw: str) -> Optional[str]:
    """Uppercase, fold accents to base letters; None if anything but A-Z remains."""
    decomposed = unicodedata.normalize("NFKD", raw.strip())
    word = "".join(ch for ch in decomposed if not unicodedata.combining(ch)).upper()
    if word and word.isascii() and word.isalpha():
        return word
    return None


def load_wordlist(source: Union[str, os.PathLike, BinaryIO, bytes]) -> WordList:
    name = None
    if isinstance(source, bytes):
        data = source
    elif isinstance(source, (str, os.PathLike)):
        name = os.fspath(source)
        with open(name, "rb") as fh:
            data = fh.read()
    else:
        name = getattr(source, "name", None)
        data = source.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        text = data.decode("latin-1")
    lines = text.splitlines()
    words = frozenset(w for w in map(normalize_word, lines) if w)
    if not words:
        raise EmptyWordListError(f"no usable words in {name or 'input'}")
    return WordList(words, name, len(lines))


def anagram_groups(wordlist: WordList) -> list[list[str]]:
    """Groups of two or more words sharing a sorted-letter signature."""
    groups: dict[str, list[str]] = defaultdict(list)
    for w in wordlist.words:
        groups["".join(sorted(w))].append(w)
    return sorted(sorted(g) for g in groups.values() if len(g) > 1)


def find_anagrams(wordlist: WordList) -> list[AnagramPair]:
    pairs = [
        AnagramPair(a, b) for g in anagram_groups(wordlist) for a in g for b in g if a != b
    ]
    pairs.sort(key=lambda p: (p.first, p.second))
    return pairs


def key_to_str(key) -> str:
    return ";".join(f"{a},{b}" for a, b in key)


def key_from_str(text: str) -> tuple[tuple[int, int], ...]:
    return tuple(tuple(int(x) for x in col.split(",")) for col in text.split(";"))


@dataclass(frozen=True)
class StarRecord:
    first: str
    second: str
    n: int
    star_class: str
    o_rot: int
    o_ref: int
    path: tuple[int, ...]
    steps: tuple[int, ...]
    perfect_step: Optional[int]
    key: str

    @classmethod
    def from_classification(cls, pair: AnagramPair, c: Classification) -> "StarRecord":
        return cls(
            pair.first, pair.second, len(pair), c.star_class.label, c.o_rot, c.o_ref,
            c.path, path_steps(c.path), c.perfect_step,
            key_to_str(canonical_shape_key(edge_matrix(c.path))),
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["path"], d["steps"] = list(self.path), list(self.steps)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "StarRecord":
        d = dict(d)
        d["path"], d["steps"] = tuple(d["path"]), tuple(d["steps"])
        return cls(**d)


@dataclass(frozen=True)
class AutostarRecord:
    word: str
    n: int
    star_class: str
    o_rot: int
    o_ref: int
    path: tuple[int, ...]
    path_count: int
    perfect_lengths: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["path"], d["perfect_lengths"] = list(self.path), list(self.perfect_lengths)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AutostarRecord":
        d = dict(d)
        d["path"], d["perfect_lengths"] = tuple(d["path"]), tuple(d["perfect_lengths"])
        return cls(**d)


@dataclass
class AutostarInventory:
    cap: int
    autostars: list[AutostarRecord] = field(default_factory=list)
    excluded: list[str] = field(default_factory=list)
    candidates: int = 0

    def count(self, label: Optional[str] = None) -> int:
        return sum(1 for a in self.autostars if label is None or a.star_class == label)


@dataclass
class CorpusReport:
    word_count: int = 0
    anagram_count: int = 0
    anagrams_by_length: dict[int, int] = field(default_factory=dict)
    stars: list[StarRecord] = field(default_factory=list)
    excluded_pairs: list[tuple[str, str]] = field(default_factory=list)
    starriness_violations: list[tuple[str, str]] = field(default_factory=list)
    perfection_violations: list[tuple[str, str]] = field(default_factory=list)
    conjecture_counterexamples: list[tuple[str, str]] = field(default_factory=list)
    autostars: Optional[AutostarInventory] = None

    @property
    def star_count(self) -> int:
        return len(self.stars)

    @property
    def star_fraction(self) -> float:
        return self.star_count / self.anagram_count if self.anagram_count else 0.0

    def lengths(self) -> list[int]:
        return sorted({s.n for s in self.stars})

    def class_counts(self) -> dict[str, int]:
        c = Counter(s.star_class for s in self.stars)
        return {cls.label: c.get(cls.label, 0) for cls in STAR_CLASSES}

    def clusters(self) -> dict[tuple[int, str], list[tuple[str, list[StarRecord]]]]:
        """(N, class) -> [(key, members)], largest cluster first, ties by key."""
        grouped: dict[tuple[int, str], dict[str, list[StarRecord]]] = defaultdict(lambda: defaultdict(list))
        for s in self.stars:
            grouped[(s.n, s.star_class)][s.key].append(s)
        return {
            k: sorted(v.items(), key=lambda kv: (-len(kv[1]), kv[0]))
            for k, v in sorted(grouped.items())
        }

    def histogram(self) -> dict[int, dict[str, tuple[int, int]]]:
        """N -> class -> (stars, clusters)."""
        clusters = self.clusters()
        hist: dict[int, dict[str, tuple[int, int]]] = {}
        for n in self.lengths():
            row = {}
            for cls in STAR_CLASSES:
                cl = clusters.get((n, cls.label), [])
                row[cls.label] = (sum(len(m) for _, m in cl), len(cl))
            hist[n] = row
        return hist


def _classify_pair(args: tuple[str, str, Optional[int]]):
    first, second, cap = args
    try:
        return classify_anagram(AnagramPair(first, second), cap=cap)
    except PathCountExceeded:
        return None


def _autostar_task(args: tuple[str, int]):
    word, cap = args
    pair = AnagramPair(word, word)
    count = count_paths(pair)
    if count > cap:
        return word, count, None
    return word, count, star_path_classifications(pair)


def _map(fn, items: list, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 8))))
    return [fn(i) for i in items]


def find_autostars(wordlist: WordList, cap: int = DEFAULT_CAP, jobs: int = 1) -> AutostarInventory:
    """Words that are star anagrams of themselves through a non-identity path."""
    candidates = sorted(
        w for w in wordlist.words if len(w) >= MIN_STAR_LENGTH and len(set(w)) < len(w)
    )
    inventory = AutostarInventory(cap=cap, candidates=len(candidates))
    for word, count, results in _map(_autostar_task, [(w, cap) for w in candidates], jobs):
        if results is None:
            inventory.excluded.append(word)
            continue
        best = select_best(results)
        if best is None:
            continue
        lengths = tuple(sorted({r.edge_length for r in results if r.star_class == StarClass.PERFECT}))
        inventory.autostars.append(
            AutostarRecord(word, len(word), best.star_class.label, best.o_rot, best.o_ref,
                           best.path, count, lengths)
        )
    return inventory


def scan(
    wordlist: WordList,
    cap: Optional[int] = DEFAULT_CAP,
    jobs: int = 1,
    autostars: bool = True,
) -> CorpusReport:
    """Classify every ordered anagram pair of the list and gather the census."""
    pairs = find_anagrams(wordlist)
    report = CorpusReport(word_count=len(wordlist), anagram_count=len(pairs))
    report.anagrams_by_length = dict(sorted(Counter(len(p) for p in pairs).items()))

    todo = [(p.first, p.second, cap) for p in pairs if len(p) >= MIN_STAR_LENGTH]
    results: dict[tuple[str, str], Classification] = {}
    for (a, b, _), c in zip(todo, _map(_classify_pair, todo, jobs)):
        if c is None:
            report.excluded_pairs.append((a, b))
        else:
            results[(a, b)] = c
    log.info("classified %d pairs (%d excluded)", len(results), len(report.excluded_pairs))

    for (a, b), c in results.items():
        if not c.is_star:
            continue
        report.stars.append(StarRecord.from_classification(AnagramPair(a, b), c))
        rev = results.get((b, a))
        if rev is None:
            continue
        if not rev.is_star:
            report.starriness_violations.append((a, b))
        if c.star_class == StarClass.PERFECT:
            rsteps = set(path_steps(reverse_path(c.path)))
            ok = (
                rev.star_class == StarClass.PERFECT
                and len(rsteps) == 1
                and rsteps.pop() == modular_inverse(c.perfect_step, len(a))
            )
            if not ok:
                report.perfection_violations.append((a, b))
        if c.star_class == StarClass.SYMMETRIC and rev.star_class < StarClass.SYMMETRIC:
            report.conjecture_counterexamples.append((a, b))
    for name in ("starriness_violations", "perfection_violations", "conjecture_counterexamples"):
        if getattr(report, name):
            log.warning("%s: %s", name, getattr(report, name))

    if autostars:
        report.autostars = find_autostars(wordlist, cap or DEFAULT_CAP, jobs)
    return report


def report_to_dict(report: CorpusReport) -> dict:
    lengths = {}
    for (n, label), clusters in report.clusters().items():
        lengths.setdefault(str(n), {})[label] = [
            {"index": i, "key": key, "members": [m.to_dict() for m in members]}
            for i, (key, members) in enumerate(clusters)
        ]
    doc = {
        "format_version": REPORT_FORMAT_VERSION,
        "summary": {
            "words": report.word_count,
            "anagrams": report.anagram_count,
            "stars": report.star_count,
            "star_fraction": round(report.star_fraction, 6),
            "classes": report.class_counts(),
            "anagrams_by_length": {str(k): v for k, v in report.anagrams_by_length.items()},
        },
        "histogram": {
            str(n): {label: {"stars": s, "clusters": c} for label, (s, c) in row.items()}
            for n, row in report.histogram().items()
        },
        "lengths": lengths,
        "checks": {
            "excluded_pairs": [list(p) for p in report.excluded_pairs],
            "starriness_violations": [list(p) for p in report.starriness_violations],
            "perfection_violations": [list(p) for p in report.perfection_violations],
            "conjecture_counterexamples": [list(p) for p in report.conjecture_counterexamples],
        },
    }
    if report.autostars is not None:
        inv = report.autostars
        doc["autostars"] = {
            "cap": inv.cap,
            "candidates": inv.candidates,
            "total": inv.count(),
            "classes": {cls.label: inv.count(cls.label) for cls in STAR_CLASSES},
            "excluded": list(inv.excluded),
            "words": [a.to_dict() for a in inv.autostars],
        }
    return doc


def report_from_dict(doc: dict) -> CorpusReport:
    summary, checks = doc["summary"], doc["checks"]
    stars = [
        StarRecord.from_dict(m)
        for classes in doc["lengths"].values()
        for clusters in classes.values()
        for cl in clusters
        for m in cl["members"]
    ]
    stars.sort(key=lambda s: (s.first, s.second))
    report = CorpusReport(
        word_count=summary["words"],
        anagram_count=summary["anagrams"],
        anagrams_by_length={int(k): v for k, v in summary["anagrams_by_length"].items()},
        stars=stars,
        **{k: [tuple(p) for p in checks[k]] for k in (
            "excluded_pairs", "starriness_violations",
            "perfection_violations", "conjecture_counterexamples")},
    )
    if "autostars" in doc:
        a = doc["autostars"]
        report.autostars = AutostarInventory(
            cap=a["cap"],
            autostars=[AutostarRecord.from_dict(w) for w in a["words"]],
            excluded=list(a["excluded"]),
            candidates=a["candidates"],
        )
    return report


TABULAR_FIELDS = ["w1", "w2", "N", "class", "O_rot", "O_ref", "L", "cluster_key"]


def export_report(report: CorpusReport, fmt: str = "structured") -> bytes:
    if fmt == "structured":
        return (json.dumps(report_to_dict(report), indent=1) + "\n").encode()
    if fmt == "tabular":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABULAR_FIELDS)
        for s in report.stars:
            L = "" if s.perfect_step is None else abs(s.perfect_step)
            writer.writerow([s.first, s.second, s.n, s.star_class, s.o_rot, s.o_ref, L, s.key])
        return buf.getvalue().encode()
    raise ValueError(f"unknown report format {fmt!r}")


def import_report(data: Union[bytes, str]) -> CorpusReport:
    return report_from_dict(json.loads(data))

