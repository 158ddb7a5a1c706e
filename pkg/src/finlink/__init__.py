"""Finite groupoids as involutive 2-links.

Finite-set limits and colimits with certified bicartesian squares, internal
groupoids and their validator, involutive 2-links with unitality and
associativity checkers, both directions of the groupoid/link
correspondence, and a magma-based link generator with exhaustive law
suites.
"""

from .errors import (
    BoundaryError,
    CompositionError,
    FinlinkError,
    InternalInconsistency,
    InvalidGroupoid,
    InvalidLink,
    InvalidSystem,
    NotActionForm,
    NotAGroup,
    NotClosed,
    NotCommutative,
    NotLinkMorphism,
    NotWellDefined,
    ParseError,
    ReconstructionError,
    ResolveError,
    SizeLimitExceeded,
)
from .finset import FinMap, FinSet, compose, identity, is_jointly_mono, tuple_label
from .limits import (
    Certificate,
    Square,
    ZigZagCompletion,
    is_biexact,
    is_pullback_square,
    is_pushout_square,
    pullback,
    pushout,
)
from .groupoid import (
    Groupoid,
    GroupoidMorphism,
    discrete,
    disjoint_union,
    from_group,
    is_groupoid_morphism,
    pair_groupoid,
    validate,
)
from .link import (
    AssociativeCertificate,
    AssociativeResult,
    Link,
    LinkMorphism,
    UnitalCertificate,
    UnitalResult,
    check_associative,
    check_unital,
    dihedral_order,
    is_link_morphism,
    validate_link,
)
from .equivalence import (
    RoundTripReport,
    count_morphisms,
    from_link,
    lift_morphism,
    round_trip,
    to_link,
)
from .magma import (
    GeneratedLink,
    MagmaSystem,
    build_link,
    check_prop1,
    check_prop3,
    check_prop4,
    check_prop5,
    check_prop6,
    check_prop7,
    check_system_axioms,
    enumerate_magmas,
    extract_crossed_module,
    trivial_point_system,
)
from .report import Check, ValidationReport

__version__ = "0.1.0"

__all__ = [
    "AssociativeCertificate",
    "AssociativeResult",
    "BoundaryError",
    "Certificate",
    "Check",
    "CompositionError",
    "FinMap",
    "FinSet",
    "FinlinkError",
    "GeneratedLink",
    "Groupoid",
    "GroupoidMorphism",
    "InternalInconsistency",
    "InvalidGroupoid",
    "InvalidLink",
    "InvalidSystem",
    "Link",
    "LinkMorphism",
    "MagmaSystem",
    "NotAGroup",
    "NotActionForm",
    "NotClosed",
    "NotCommutative",
    "NotLinkMorphism",
    "NotWellDefined",
    "ParseError",
    "ReconstructionError",
    "ResolveError",
    "RoundTripReport",
    "SizeLimitExceeded",
    "Square",
    "UnitalCertificate",
    "UnitalResult",
    "ValidationReport",
    "ZigZagCompletion",
    "build_link",
    "check_associative",
    "check_prop1",
    "check_prop3",
    "check_prop4",
    "check_prop5",
    "check_prop6",
    "check_prop7",
    "check_system_axioms",
    "check_unital",
    "compose",
    "count_morphisms",
    "dihedral_order",
    "discrete",
    "disjoint_union",
    "enumerate_magmas",
    "extract_crossed_module",
    "from_group",
    "from_link",
    "identity",
    "is_biexact",
    "is_groupoid_morphism",
    "is_jointly_mono",
    "is_link_morphism",
    "is_pullback_square",
    "is_pushout_square",
    "lift_morphism",
    "pair_groupoid",
    "pullback",
    "pushout",
    "round_trip",
    "to_link",
    "trivial_point_system",
    "tuple_label",
    "validate",
    "validate_link",
]
