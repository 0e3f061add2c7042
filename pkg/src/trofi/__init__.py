"""Tropical refined invariants of h-transverse toric surfaces, computed
by exact floor-diagram enumeration, with the closed-form asymptotic
series they stabilize to."""

from .asymptotics import (
    ar_codeg0,
    ar_codeg1,
    ar_codeg1_contribs,
    ar_codeg1_for_class,
    ar_genus0,
    ar_genus0_hirzebruch,
    ar_genus1,
    conjecture_mod_u2,
    verify,
)
from .diagram import FloorDiagram
from .enumeration import (
    FullEnumerationCapError,
    enumerate_diagrams,
    enumerate_weighted,
)
from .invariants import bg, bg_cleared, bg_truncated, bg_truncated_report, clearing_factor
from .polygon import LatticeInvariants, SurfaceClass, example_polygon
from .series import (
    BiTruncSeries,
    SymLaurent,
    TruncSeries,
    bracket_series,
    eisenstein_e2,
    laurent_to_trunc,
    partition_series,
    quantum_integer,
)
from .words import (
    Pearl,
    genus0_word_series,
    marked_from_word,
    parse_pearl,
    parse_word,
    pearl_series,
    pearl_weighted_series,
    pearls_from_sloping,
    sentence_series,
    sloping_from_pearls,
    word_codegree,
    word_from_marked,
)

__version__ = "0.1.0"

__all__ = [
    "ar_codeg0",
    "ar_codeg1",
    "ar_codeg1_contribs",
    "ar_codeg1_for_class",
    "ar_genus0",
    "ar_genus0_hirzebruch",
    "ar_genus1",
    "conjecture_mod_u2",
    "verify",
    "FloorDiagram",
    "FullEnumerationCapError",
    "enumerate_diagrams",
    "enumerate_weighted",
    "bg",
    "bg_cleared",
    "bg_truncated",
    "bg_truncated_report",
    "clearing_factor",
    "LatticeInvariants",
    "SurfaceClass",
    "example_polygon",
    "BiTruncSeries",
    "SymLaurent",
    "TruncSeries",
    "bracket_series",
    "eisenstein_e2",
    "laurent_to_trunc",
    "partition_series",
    "quantum_integer",
    "Pearl",
    "genus0_word_series",
    "marked_from_word",
    "parse_pearl",
    "parse_word",
    "pearl_series",
    "pearl_weighted_series",
    "pearls_from_sloping",
    "sentence_series",
    "sloping_from_pearls",
    "word_codegree",
    "word_from_marked",
]
