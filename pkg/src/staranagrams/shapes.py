"""Brute-force census of star polygons up to plane rotation."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .classify import StarClass, is_star_path, reflective_order, rotational_order
from .core import EdgeMatrix, canonical_shape_key, edge_matrix, path_steps
from .errors import InvalidPathError, OutOfRangeError

MIN_N, MAX_N = 5, 12


@dataclass
class ShapeCensus:
    n: int
    keys: dict[StarClass, set[EdgeMatrix]] = field(default_factory=dict)

    def count(self, cls: StarClass) -> int:
        return len(self.keys.get(cls, ()))

    @property
    def asymmetric(self) -> int:
        return self.count(StarClass.ASYMMETRIC)

    @property
    def symmetric(self) -> int:
        return self.count(StarClass.SYMMETRIC)

    @property
    def perfect(self) -> int:
        return self.count(StarClass.PERFECT)

    @property
    def total(self) -> int:
        return self.asymmetric + self.symmetric + self.perfect

    def row(self) -> tuple[int, int, int, int]:
        return self.asymmetric, self.symmetric, self.perfect, self.total


def shape_of(path: Sequence[int]) -> EdgeMatrix:
    if not is_star_path(path_steps(path)):
        raise InvalidPathError(f"not a star path: {list(path)}")
    return canonical_shape_key(edge_matrix(path))


def shape_class(E: EdgeMatrix) -> StarClass:
    """Class of a star shape from the symmetry orders of its edge matrix."""
    n = len(E)
    o_rot = rotational_order(E)
    if o_rot == n:
        return StarClass.PERFECT
    return StarClass.SYMMETRIC if o_rot + reflective_order(E) > 1 else StarClass.ASYMMETRIC


def _star_permutations(n: int, prefix: tuple[int, ...]) -> Iterator[list[int]]:
    """Permutations of 0..n-1 starting with ``prefix`` with no step of size 1.

    Pruning neighbour steps early gives exactly the star paths that filtering
    all permutations would give.
    """
    used = [False] * n
    path = list(prefix) + [0] * (n - len(prefix))
    for p in prefix:
        used[p] = True
    for a, b in zip(prefix, prefix[1:]):
        if (a - b) % n in (1, n - 1):
            return

    def rec(i: int) -> Iterator[list[int]]:
        if i == n:
            if (path[-1] - path[0]) % n not in (1, n - 1):
                yield path
            return
        prev = path[i - 1]
        for v in range(n):
            if used[v] or (prev - v) % n in (1, n - 1):
                continue
            used[v] = True
            path[i] = v
            yield from rec(i + 1)
            used[v] = False

    yield from rec(len(prefix))


def _matrices_for_prefix(args: tuple[int, tuple[int, ...]]) -> set[EdgeMatrix]:
    n, prefix = args
    return {edge_matrix(p) for p in _star_permutations(n, prefix)}


def enumerate_star_shapes(n: int, jobs: int = 1, fix_start: bool = True) -> ShapeCensus:
    """Count the distinct star polygons on ``n`` nodes by class.

    With ``fix_start`` only paths beginning at node 0 are scanned; every shape
    still appears because any path can be relabelled to start there.
    """
    if not MIN_N <= n <= MAX_N:
        raise OutOfRangeError(f"N must be in {MIN_N}..{MAX_N}, got {n}")
    starts = [0] if fix_start else list(range(n))
    tasks = [(n, (s, v)) for s in starts for v in range(n) if v != s]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_matrices_for_prefix, tasks))
    else:
        parts = [_matrices_for_prefix(t) for t in tasks]
    keys = {canonical_shape_key(E) for part in parts for E in part}
    census = ShapeCensus(n, {c: set() for c in (StarClass.ASYMMETRIC, StarClass.SYMMETRIC, StarClass.PERFECT)})
    for key in keys:
        census.keys[shape_class(key)].add(key)
    return census
