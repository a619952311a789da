"""Exact reduced-word combinatorics in Coxeter groups."""

from .field import FieldContext, FieldElement, context_for, field_for
from .system import (
    INF,
    CoxeterSystem,
    FiniteTypeReport,
    Word,
    build_system,
    classify_finite,
    endpoints,
    format_word,
    irreducible_components,
    is_cfc_finite,
    named_family,
    named_system,
    parse_graph_file,
    parse_word,
)
from .roots import (
    apply_generator,
    descents,
    equal_elements,
    is_logarithmic_up_to,
    is_reduced,
    length,
    power_length,
    reduce_word,
    root_sequence,
)
from .words import (
    Band,
    CapExceeded,
    LogVerdict,
    Outcome,
    Reason,
    braid_closure,
    canonical_form,
    commutation_class,
    cyclic_shifts,
    decide_logarithmic,
    detect_bands,
    is_cfc,
    is_cyclically_reduced,
    is_fc,
    is_full_support,
    is_torsion_free,
    support,
)
from .orientations import (
    AcyclicOrientation,
    acyclic_orientations,
    conjugacy_classes_of_coxeter_elements,
    coxeter_to_orientation,
    kappa_classes,
    orientation_to_coxeter,
    source_to_sink,
    system_graph,
    tutte,
    tutte_polynomial,
)
from .enumeration import (
    EnumerationResult,
    affine_spotchecks,
    cfc_count_via_orientations,
    enumerate_cfc,
    enumerate_fc,
    fibonacci_check,
    pattern_avoidance_count,
    verify_recurrence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
