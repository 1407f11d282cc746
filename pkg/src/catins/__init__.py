"""Catabolizability of standard Young tableaux by catabolism insertion."""

from catins._accel import BACKEND
from catins.catabolism import (
    catabolizable_set,
    ctype_greedy,
    is_catabolizable,
    superstandard,
    superstandard_syt,
)
from catins.chains import family_with_lengths, max_family
from catins.cocharge import cocharge, cocharge_label, standard_word_from_labeling
from catins.core import Tableau, conjugate, dominance_geq, row_insert, rowword
from catins.insertion import F, ctype, run_algorithm3, run_F

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "F",
    "Tableau",
    "catabolizable_set",
    "cocharge",
    "cocharge_label",
    "conjugate",
    "ctype",
    "ctype_greedy",
    "dominance_geq",
    "family_with_lengths",
    "is_catabolizable",
    "max_family",
    "row_insert",
    "rowword",
    "run_F",
    "run_algorithm3",
    "standard_word_from_labeling",
    "superstandard",
    "superstandard_syt",
]
