"""Integer arithmetic on paths around a circle of letters.

A path is a permutation of the node labels ``0..N-1``: entry ``n`` is the node
(position in the first word) visited by the ``n``-th letter of the second
word. Everything here is pure and works on plain tuples.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidPathError

Path = tuple[int, ...]
Column = tuple[int, int]
EdgeMatrix = tuple[Column, ...]


def validate_path(nodes: Sequence[int]) -> Path:
    """Return ``nodes`` as a tuple, raising if it is not a permutation of 0..N-1."""
    path = tuple(int(p) for p in nodes)
    if len(path) < 2:
        raise InvalidPathError(f"path needs at least 2 nodes, got {len(path)}")
    if sorted(path) != list(range(len(path))):
        raise InvalidPathError(f"not a permutation of 0..{len(path) - 1}: {list(path)}")
    return path


def path_differences(path: Sequence[int]) -> tuple[int, ...]:
    p = validate_path(path)
    n = len(p)
    return tuple(p[(i + 1) % n] - p[i] for i in range(n))


def step_from_diff(d: int, n: int) -> int:
    """Map one raw difference onto the step range (-N/2, N/2]."""
    if d == 0:
        raise InvalidPathError("zero difference: path revisits a node")
    twice = 2 * abs(d)
    if twice < n:
        return d
    if twice == n:
        return n // 2
    return d - n if d > 0 else d + n


def steps_from_diffs(diffs: Sequence[int], n: int) -> tuple[int, ...]:
    for d in diffs:
        if not -(n - 1) <= d <= n - 1:
            raise InvalidPathError(f"difference {d} outside [-{n - 1}, {n - 1}]")
    return tuple(step_from_diff(d, n) for d in diffs)


def path_steps(path: Sequence[int]) -> tuple[int, ...]:
    """Steps of a path; shorthand for ``steps_from_diffs(path_differences(p))``."""
    return steps_from_diffs(path_differences(path), len(path))


def apply_steps(start: int, steps: Sequence[int]) -> Path:
    """Walk the circle from ``start``; the result is not checked for revisits.

    Returns N nodes, one per step; the final step should lead back to ``start``.
    """
    n = len(steps)
    if not 0 <= start < n:
        raise ValueError(f"start {start} outside 0..{n - 1}")
    nodes = [start]
    for s in steps[:-1]:
        nodes.append((nodes[-1] + s) % n)
    return tuple(nodes)


def edge_matrix(path: Sequence[int]) -> EdgeMatrix:
    """Column ``m`` holds the two sorted steps leaving node ``m``; diameters are 0."""
    p = validate_path(path)
    n = len(p)
    if n < 3:
        raise InvalidPathError("edge matrix needs N >= 3")
    s = path_steps(p)

    def code(step: int) -> int:
        return 0 if 2 * abs(step) == n else step

    cols: list[Column] = [(0, 0)] * n
    for k, node in enumerate(p):
        a, b = code(s[k]), code(-s[k - 1])
        cols[node] = (a, b) if a <= b else (b, a)
    return tuple(cols)


def shift_columns(E: EdgeMatrix, k: int) -> EdgeMatrix:
    """Circularly shift columns so column ``k`` becomes column 0."""
    k %= len(E)
    return E[k:] + E[:k]


def canonical_shape_key(E: EdgeMatrix) -> EdgeMatrix:
    """Lexicographically least circular column shift of ``E``."""
    return min(shift_columns(E, k) for k in range(len(E)))


def relabel(path: Sequence[int], c: int) -> Path:
    """Add ``c`` to every node label (mod N), i.e. rotate the drawing."""
    n = len(path)
    return tuple((p + c) % n for p in path)
