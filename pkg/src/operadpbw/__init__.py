"""Quadratic operads: PBW bases, normal forms, Koszul duals and bar homology."""

from .field import QQ, PrimeField, Rationals, parse_field
from .free import Element, GeneratorModule, OperadError, pointed_shuffles
from .orders import MonomialOrder, SymmetrizedOrder, compare, compatibility_violations, path_words
from .pbw import QuadraticPresentation, RewriteSystem, check_pbw, quadratic_split, symmetrize
from .parser import ParseError, dump, parse, parse_element
from .corpus import builtin
from .dual import dual_presentation
from .bar import BarComplex, bar_basis, bar_differential, homology

__all__ = [
    "QQ", "PrimeField", "Rationals", "parse_field",
    "Element", "GeneratorModule", "OperadError", "pointed_shuffles",
    "MonomialOrder", "SymmetrizedOrder", "compare", "compatibility_violations", "path_words",
    "QuadraticPresentation", "RewriteSystem", "check_pbw", "quadratic_split", "symmetrize",
    "ParseError", "dump", "parse", "parse_element",
    "builtin", "dual_presentation", "BarComplex", "bar_basis", "bar_differential", "homology",
]

__version__ = "0.1.0"
