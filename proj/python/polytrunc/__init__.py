"""Simple 3-polytopes: edge truncation, flagness, p-vectors."""

from ._core import (
    Polytope3,
    PolytruncError,
    admits_simple_truncation,
    catalog,
    catalog_names,
    check_flag_sequence,
    check_star_identity,
    find_in_catalog,
    flag_criterion,
    flagify,
    is_flag,
    is_flag_oracle,
    missing_faces,
    parse_canonical_text,
    parse_planar_code,
    scan,
    three_belts,
    transformed_pvector,
    truncate,
    valency_profile,
    verify,
    write_canonical_text,
    write_planar_code,
)

__all__ = [name for name in dir() if not name.startswith("_")]
