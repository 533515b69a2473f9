"""Enumerating the paths that spell one word over the letter circle of another.

With repeated letters several paths spell the same word. Paths are produced
in lexicographic order: the second word is scanned left to right and each
letter takes the still-free positions of that letter in the first word in
increasing order. Classification relies on this order for tie-breaking.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

from .core import Path, validate_path
from .errors import NotAnAnagramError, PathCountExceeded, WordTooShortError


@dataclass(frozen=True)
class AnagramPair:
    first: str
    second: str

    def __post_init__(self):
        for w in (self.first, self.second):
            if not (w.isascii() and w.isalpha() and w.isupper()):
                raise NotAnAnagramError(f"words must be uppercase A-Z, got {w!r}")
        if Counter(self.first) != Counter(self.second):
            raise NotAnAnagramError(f"{self.first} and {self.second} are not anagrams")

    def __len__(self):
        return len(self.first)

    def reversed(self) -> "AnagramPair":
        return AnagramPair(self.second, self.first)

    def __str__(self):
        return f"{self.first}->{self.second}"


@dataclass(frozen=True)
class PathSet:
    paths: tuple[Path, ...]
    count: int


def count_paths(pair: AnagramPair) -> int:
    """Number of paths for the pair: the product of w! over letter multiplicities w."""
    return prod(factorial(w) for w in Counter(pair.first).values())


def _positions(word: str) -> dict[str, list[int]]:
    pos: dict[str, list[int]] = defaultdict(list)
    for i, ch in enumerate(word):
        pos[ch].append(i)
    return pos


def iter_paths(pair: AnagramPair) -> Iterator[Path]:
    """Yield every path for ``pair`` in lexicographic order."""
    pos = _positions(pair.first)
    second = pair.second
    n = len(second)
    used = [False] * n
    path = [0] * n

    def rec(i: int) -> Iterator[Path]:
        if i == n:
            yield tuple(path)
            return
        for node in pos[second[i]]:
            if not used[node]:
                used[node] = True
                path[i] = node
                yield from rec(i + 1)
                used[node] = False

    yield from rec(0)


def iter_star_paths(pair: AnagramPair) -> Iterator[Path]:
    """Yield only the star paths, in the same relative order as ``iter_paths``.

    A branch is abandoned as soon as two consecutive letters land on
    neighbouring nodes, which makes this far cheaper than filtering.
    """
    pos = _positions(pair.first)
    second = pair.second
    n = len(second)
    if n < 5:
        return
    used = [False] * n
    path = [0] * n

    def adjacent(a: int, b: int) -> bool:
        return (a - b) % n in (1, n - 1)

    def rec(i: int) -> Iterator[Path]:
        if i == n:
            if not adjacent(path[-1], path[0]):
                yield tuple(path)
            return
        prev = path[i - 1] if i else None
        for node in pos[second[i]]:
            if used[node] or (prev is not None and adjacent(prev, node)):
                continue
            used[node] = True
            path[i] = node
            yield from rec(i + 1)
            used[node] = False

    yield from rec(0)


def last_path(pair: AnagramPair) -> Path:
    """The final path ``iter_paths`` would yield, built directly."""
    pos = {ch: list(reversed(v)) for ch, v in _positions(pair.first).items()}
    return tuple(pos[ch].pop(0) for ch in pair.second)


def check_cap(pair: AnagramPair, cap: int | None) -> int:
    count = count_paths(pair)
    if cap is not None:
        if cap < 1:
            raise ValueError("cap must be >= 1")
        if count > cap:
            raise PathCountExceeded(count, cap)
    return count


def enumerate_paths(pair: AnagramPair, cap: int | None = None) -> PathSet:
    count = check_cap(pair, cap)
    return PathSet(tuple(iter_paths(pair)), count)


def reverse_path(path: Sequence[int]) -> Path:
    """Inverse permutation: the path for the anagram read in the other direction."""
    p = validate_path(path)
    inv = [0] * len(p)
    for n, node in enumerate(p):
        inv[node] = n
    return tuple(inv)


def autostar_paths(word: str, cap: int) -> PathSet:
    if len(word) < 5:
        raise WordTooShortError(f"{word} is shorter than 5 letters")
    return enumerate_paths(AnagramPair(word, word), cap)
