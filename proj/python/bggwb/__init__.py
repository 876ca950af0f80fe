from ._core import (
    EModule,
    Error,
    FilteredComplex,
    InvariantViolation,
    ParseError,
    PrecisionError,
    PreconditionError,
    betti_table,
    build_bgg,
    criterion,
    default_imax,
    default_truncation,
    degenerates_at,
    direct_sum,
    e1_check,
    expected_k,
    exterior_algebra,
    model,
    page,
    predict_vanishing,
    regularity,
    regularity_via_bgg,
    residue_field,
    sum_complexes,
    verify_theorem_a,
)

__all__ = [name for name in dir() if not name.startswith("_")]
