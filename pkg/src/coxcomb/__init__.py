"""Combinatorial invariants of Cox rings of complexity-one varieties."""

__version__ = "0.1.0"

from .abelian import (  # noqa: E402
    FgAbelianGroup,
    GroupHom,
    check_exact,
    cokernel,
    element_eq,
    forget_grading,
    hom_group,
    localize,
)
from .intmatrix import IntegerMatrix, SmithDecomposition, hermite_normal_form, smith_normal_form  # noqa: E402
from .platonic import GeometryFlags, is_platonic_ring, is_platonic_tuple, log_terminal  # noqa: E402
from .ring import ExponentData, ProjectivePoint, build, trinomial  # noqa: E402

__all__ = [
    "ExponentData",
    "FgAbelianGroup",
    "GeometryFlags",
    "GroupHom",
    "IntegerMatrix",
    "ProjectivePoint",
    "SmithDecomposition",
    "build",
    "check_exact",
    "cokernel",
    "element_eq",
    "forget_grading",
    "hermite_normal_form",
    "hom_group",
    "is_platonic_ring",
    "is_platonic_tuple",
    "localize",
    "log_terminal",
    "smith_normal_form",
    "trinomial",
]
