"""Star anagrams: anagram pairs whose letter-circle polygon never joins former neighbours."""

from importlib.resources import files

from .classify import (
    Classification,
    StarClass,
    classify_anagram,
    classify_path,
    is_perfect_path,
    is_star_path,
    reflective_order,
    rotational_order,
)
from .core import (
    apply_steps,
    canonical_shape_key,
    edge_matrix,
    path_differences,
    path_steps,
    steps_from_diffs,
)
from .corpus import CorpusReport, WordList, export_report, find_anagrams, find_autostars, load_wordlist, scan
from .numtheory import is_coprime, modular_inverse, perfect_path, valid_perfect_edge_lengths
from .paths import AnagramPair, autostar_paths, count_paths, enumerate_paths, reverse_path
from .shapes import ShapeCensus, enumerate_star_shapes, shape_of

__version__ = "0.1.0"


def fixture_wordlist_path():
    """Path of the bundled wordlist of words used in the examples."""
    return files(__package__) / "data" / "fixture_words.txt"
