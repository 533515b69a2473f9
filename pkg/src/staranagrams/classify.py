"""Star detection and symmetry classification of paths and anagrams."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Optional, Sequence

from .core import EdgeMatrix, Path, edge_matrix, path_steps, shift_columns, validate_path
from .errors import WordTooShortError
from .paths import AnagramPair, check_cap, iter_paths, iter_star_paths, last_path

MIN_STAR_LENGTH = 5


class StarClass(IntEnum):
    NON_STAR = 0
    ASYMMETRIC = 1
    SYMMETRIC = 2
    PERFECT = 3

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_label(cls, label: str) -> "StarClass":
        return cls[label.upper().replace("-", "_")]


@dataclass(frozen=True)
class Classification:
    star_class: StarClass
    o_rot: Optional[int]
    o_ref: Optional[int]
    path: Path
    perfect_step: Optional[int] = None

    @property
    def is_star(self) -> bool:
        return self.star_class > StarClass.NON_STAR

    @property
    def symmetry_sum(self) -> int:
        # undetermined orders count as -1 each
        return (-1 if self.o_rot is None else self.o_rot) + (-1 if self.o_ref is None else self.o_ref)

    @property
    def edge_length(self) -> Optional[int]:
        return None if self.perfect_step is None else abs(self.perfect_step)


def is_star_path(steps: Sequence[int]) -> bool:
    return all(abs(s) != 1 for s in steps)


def is_perfect_path(steps: Sequence[int]) -> Optional[int]:
    """Return the constant step S if every step equals S with |S| > 1."""
    first = steps[0]
    if abs(first) > 1 and all(s == first for s in steps):
        return first
    return None


def rotational_order(E: EdgeMatrix) -> int:
    n = len(E)
    for k in range(1, n + 1):
        if n % k == 0 and shift_columns(E, k) == E:
            return n // k
    return 1


def _negated(col: tuple[int, int]) -> tuple[int, int]:
    return (-col[1], -col[0])


def reflective_order(E: EdgeMatrix) -> int:
    """Count the mirror axes of the polygon.

    Axis ``c`` maps node m to (c - m) mod N. The shape is symmetric about it
    when every column equals the negated, re-sorted column of its mirror node;
    for nodes on the axis this reduces to e1 = -e2.
    """
    n = len(E)
    neg = [_negated(col) for col in E]
    return sum(
        1 for c in range(n) if all(E[m] == neg[(c - m) % n] for m in range(n))
    )


def classify_path(path: Sequence[int]) -> Classification:
    p = validate_path(path)
    if len(p) < MIN_STAR_LENGTH:
        raise WordTooShortError(f"stars need N >= {MIN_STAR_LENGTH}, got {len(p)}")
    steps = path_steps(p)
    if not is_star_path(steps):
        return Classification(StarClass.NON_STAR, None, None, p)
    S = is_perfect_path(steps)
    if S is not None:
        return Classification(StarClass.PERFECT, len(p), len(p), p, S)
    E = edge_matrix(p)
    o_rot, o_ref = rotational_order(E), reflective_order(E)
    cls = StarClass.SYMMETRIC if o_rot + o_ref > 1 else StarClass.ASYMMETRIC
    return Classification(cls, o_rot, o_ref, p)


def select_best(results: Iterable[Classification]) -> Optional[Classification]:
    """Greatest class, then greatest O_rot + O_ref, then the last one seen."""
    best = None
    for r in results:
        if best is None or (r.star_class, r.symmetry_sum) >= (best.star_class, best.symmetry_sum):
            best = r
    return best


def classify_anagram(
    pair: AnagramPair, cap: int | None = None, exhaustive: bool = False
) -> Classification:
    """Classify an anagram by its best path.

    By default only star paths are generated (non-star branches are pruned);
    if none exist the answer is the last enumerated path, a non-star, which
    is what scanning every path would select. ``exhaustive=True`` scans all
    paths instead.
    """
    if len(pair) < MIN_STAR_LENGTH:
        raise WordTooShortError(f"stars need N >= {MIN_STAR_LENGTH}, got {len(pair)}")
    check_cap(pair, cap)
    source = iter_paths(pair) if exhaustive else iter_star_paths(pair)
    best = select_best(classify_path(p) for p in source)
    if best is None or not best.is_star:
        return Classification(StarClass.NON_STAR, None, None, last_path(pair))
    return best


def star_path_classifications(pair: AnagramPair, cap: int | None = None) -> list[Classification]:
    """Classification of every star path of the pair, in enumeration order."""
    check_cap(pair, cap)
    return [classify_path(p) for p in iter_star_paths(pair)]
