import pytest

from staranagrams.classify import StarClass, classify_anagram
from staranagrams.core import canonical_shape_key, edge_matrix
from staranagrams.errors import InvalidPathError, OutOfRangeError
from staranagrams.numtheory import perfect_path, valid_perfect_edge_lengths
from staranagrams.paths import AnagramPair, reverse_path
from staranagrams.shapes import enumerate_star_shapes, shape_class, shape_of

TABLE1 = {
    5: (0, 0, 1, 1),
    6: (0, 1, 0, 1),
    7: (0, 3, 2, 5),
    8: (12, 14, 1, 27),
    9: (126, 47, 2, 175),
}


@pytest.mark.parametrize("n, row", TABLE1.items())
def test_table1(n, row):
    assert enumerate_star_shapes(n).row() == row


@pytest.mark.parametrize("n", [5, 6, 7])
def test_fixed_start_matches_full_enumeration(n):
    fixed = enumerate_star_shapes(n)
    full = enumerate_star_shapes(n, fix_start=False)
    assert fixed.keys == full.keys


def test_parallel_matches_serial():
    assert enumerate_star_shapes(8, jobs=2).keys == enumerate_star_shapes(8).keys


def test_out_of_range():
    for n in (4, 13):
        with pytest.raises(OutOfRangeError):
            enumerate_star_shapes(n)


def mirror(E):
    """Edge matrix of the reflected shape (m -> -m)."""
    n = len(E)
    return tuple(tuple(sorted((-E[(-m) % n][1], -E[(-m) % n][0]))) for m in range(n))


def test_mirror_images_counted_separately():
    census = enumerate_star_shapes(8)
    asym = census.keys[StarClass.ASYMMETRIC]
    distinct = [k for k in asym if canonical_shape_key(mirror(k)) != k]
    assert distinct
    assert all(canonical_shape_key(mirror(k)) in asym for k in asym)


def test_perfect_keys_correspond_to_edge_lengths():
    for n in range(5, 11):
        census = enumerate_star_shapes(n)
        expected = {canonical_shape_key(edge_matrix(perfect_path(n, L)))
                    for L in valid_perfect_edge_lengths(n)}
        assert census.keys[StarClass.PERFECT] == expected


def test_shape_of():
    assert shape_of((0, 2, 4, 1, 3)) == shape_of((1, 3, 0, 2, 4))
    c = classify_anagram(AnagramPair("CAREERS", "CREASER"))
    assert shape_of(c.path) == shape_of(perfect_path(7, c.perfect_step))
    nitrogen = (3, 1, 7, 5, 2, 4, 0, 6)
    assert shape_of(nitrogen) == shape_of(nitrogen[::-1])
    with pytest.raises(InvalidPathError):
        shape_of((7, 6, 3, 5, 1, 2, 0, 4))


def test_reverse_path_changes_shape_but_keeps_star():
    c = classify_anagram(AnagramPair("TOENAILS", "INSOLATE"))
    assert shape_class(shape_of(c.path)) == StarClass.SYMMETRIC
    assert shape_class(shape_of(reverse_path(c.path))) == StarClass.SYMMETRIC
