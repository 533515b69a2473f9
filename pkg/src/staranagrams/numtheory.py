"""Edge lengths of perfect stars and the modular inverse of a step size."""

from __future__ import annotations

from .core import Path, apply_steps
from .errors import InvalidEdgeLengthError, NoInverseError, WordTooShortError


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def is_coprime(a: int, b: int) -> bool:
    if a < 1 or b < 1:
        raise ValueError("coprimality is defined here for positive integers")
    return egcd(a, b)[0] == 1


def to_step_range(k: int, n: int) -> int:
    """Representative of k mod n in (-n/2, n/2]."""
    k %= n
    return k - n if 2 * k > n else k


def valid_perfect_edge_lengths(n: int) -> set[int]:
    if n < 5:
        raise WordTooShortError(f"perfect stars need N >= 5, got {n}")
    return {L for L in range(2, (n + 1) // 2) if is_coprime(L, n)}


def perfect_path(n: int, step: int, start: int = 0) -> Path:
    """Constant-step path from ``start``; raises if it revisits a node early."""
    L = abs(step)
    if not 2 <= L or 2 * L >= n:
        raise InvalidEdgeLengthError(f"edge length {L} outside [2, {n}/2) for N={n}")
    path = apply_steps(start, [step] * n)
    seen = set()
    for i, node in enumerate(path):
        if node in seen:
            raise InvalidEdgeLengthError(
                f"step {step} revisits node {node} after {i} steps for N={n}"
            )
        seen.add(node)
    return path


def modular_inverse(step: int, n: int) -> int:
    """S' with S'*S = 1 (mod n), reported in the step range (-n/2, n/2]."""
    g, x, _ = egcd(step % n, n)
    if g != 1:
        raise NoInverseError(f"{step} has no inverse modulo {n}")
    return to_step_range(x, n)
