"""Partial endomorphism monoids of star graphs.

Thin python layer over the C++ core: exact arithmetic on partial
transformations, membership tests for the six monoids, enumeration against
closed-form cardinalities, Green's relations with brute-force oracles,
generating-set verification and exhaustive rank certification.
"""

from ._core import (
    Family,
    GeneratorCatalog,
    GreensOracle,
    GreensRelation,
    PartialTransformation,
    __version__,
    cardinality,
    census,
    certify_rank,
    classify,
    closure,
    compose,
    decompose_iend,
    decompose_paut,
    egg_box,
    enumerate_family,
    factorization_violations,
    family_name,
    is_member,
    is_member_definitional,
    is_regular,
    is_regular_oracle,
    named_generating_set,
    rank_search,
    related,
    units,
    verify_generators,
)

__all__ = [
    "Family",
    "GeneratorCatalog",
    "GreensOracle",
    "GreensRelation",
    "PartialTransformation",
    "__version__",
    "cardinality",
    "census",
    "certify_rank",
    "classify",
    "closure",
    "compose",
    "decompose_iend",
    "decompose_paut",
    "egg_box",
    "enumerate_family",
    "factorization_violations",
    "family_name",
    "is_member",
    "is_member_definitional",
    "is_regular",
    "is_regular_oracle",
    "named_generating_set",
    "rank_search",
    "related",
    "units",
    "verify_generators",
]
