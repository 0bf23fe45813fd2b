"""Abelian ideals of Borel subalgebras and their encodings in the affine Weyl group."""
from .rootsys import AffineRoot, RootSystem, RootSystemError, build_root_system, parse_type
from .weyl import AffineWeylElement, NotAnInversionSet, WeylElement, element_from_inversions

__all__ = [
    "AffineRoot",
    "AffineWeylElement",
    "NotAnInversionSet",
    "RootSystem",
    "RootSystemError",
    "WeylElement",
    "build_root_system",
    "element_from_inversions",
    "parse_type",
]
