"""Exhaustive small-case campaigns, seeded property suites and structure
predicates, all reporting through :class:`VerificationReport`."""

from .campaigns import (
    LI_EXHAUSTIVE_MAX_N,
    LI_PRUNED_MAX_N,
    TURAN_EXHAUSTIVE_MAX_N,
    check_li_triangle,
    check_multigraph_turan,
    classify_rainbow_free,
    turan_threshold,
)
from .enumeration import ColoringSearch, bell_number, canonical_form, graphs_up_to_iso, restricted_growth_strings
from .report import SCHEMA, VerificationReport, deserialize_instance, serialize_instance
from .suite import OBSERVATIONS, PIPELINE, check_pipeline, property_suite

__all__ = [
    "LI_EXHAUSTIVE_MAX_N",
    "LI_PRUNED_MAX_N",
    "TURAN_EXHAUSTIVE_MAX_N",
    "check_li_triangle",
    "check_multigraph_turan",
    "classify_rainbow_free",
    "turan_threshold",
    "ColoringSearch",
    "bell_number",
    "canonical_form",
    "graphs_up_to_iso",
    "restricted_growth_strings",
    "SCHEMA",
    "VerificationReport",
    "deserialize_instance",
    "serialize_instance",
    "OBSERVATIONS",
    "PIPELINE",
    "check_pipeline",
    "property_suite",
]
