"""Brute-force reference computations, deliberately independent of the package.

None of these import from ``staranagrams``; they work from the definitions
(neighbour sets, chord sets, dihedral maps) rather than from steps/edge
matrices.
"""

from itertools import permutations


def step_by_search(a, b, n):
    """The unique s in (-n/2, n/2], s != 0, with (a + s) mod n == b."""
    candidates = [s for s in range(-n, n + 1) if 0 < 2 * abs(s) <= n and (a + s) % n == b]
    candidates = [s for s in candidates if not 2 * s == -n]
    assert len(candidates) == 1, (a, b, n, candidates)
    return candidates[0]


def steps_by_search(path):
    n = len(path)
    return [step_by_search(path[i], path[(i + 1) % n], n) for i in range(n)]


def chord_set(path):
    n = len(path)
    return frozenset(frozenset((path[i], path[(i + 1) % n])) for i in range(n))


def is_star_by_neighbours(first, second, path):
    """No pair adjacent (cyclically) in ``first`` is adjacent in the path."""
    n = len(path)
    old = {frozenset((i, (i + 1) % n)) for i in range(n)}
    return not (chord_set(path) & old)


def dihedral_orders(path):
    """(rotations fixing the chord set, reflections fixing it), identity included."""
    n = len(path)
    chords = chord_set(path)

    def image(f):
        return frozenset(frozenset(f(v) for v in c) for c in chords)

    rot = sum(1 for k in range(n) if image(lambda v, k=k: (v + k) % n) == chords)
    ref = sum(1 for c in range(n) if image(lambda v, c=c: (c - v) % n) == chords)
    return rot, ref


def paths_by_brute_force(first, second):
    """All permutations p with first[p[i]] == second[i], sorted."""
    n = len(first)
    return sorted(p for p in permutations(range(n)) if all(first[p[i]] == second[i] for i in range(n)))


def inverse_by_trial(s, n):
    hits = [x for x in range(n) if (x * s) % n == 1]
    return hits[0] if hits else None


def gcd_by_trial(a, b):
    return max(d for d in range(1, min(a, b) + 1) if a % d == 0 and b % d == 0)
