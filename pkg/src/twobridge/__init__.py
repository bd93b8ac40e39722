"""Enumeration of 2-bridge knots through billiard-table words.

Words in ``T(c)`` are enumerated, turned into ``c``-crossing alternating
plat diagrams, smoothed with Seifert's algorithm, and the resulting
circle counts are aggregated into exact per-crossing-number statistics.
"""

from twobridge.words import (
    RunWord,
    WordError,
    enumerate_words,
    enumerate_palindromic,
    parse_word,
)
from twobridge.diagram import AlternatingDiagram, to_alternating
from twobridge.seifert import genus, seifert_state
from twobridge.stats import CrossingStats, aggregate, verify_all

__all__ = [
    "AlternatingDiagram",
    "CrossingStats",
    "RunWord",
    "WordError",
    "aggregate",
    "enumerate_palindromic",
    "enumerate_words",
    "genus",
    "parse_word",
    "seifert_state",
    "to_alternating",
    "verify_all",
]
