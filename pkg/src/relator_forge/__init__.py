"""Symbolic toolkit for the one-relator groups ``G_{r,w}(l,k) = <a, b | (r^l)^(r^w) = r^k>``."""

from .certify import certify_theorem_A, certify_theorem_C, serialize, verify
from .dsl import parse_presentation, parse_word
from .kernel import IndexedPresentation, IndexedWord, height_rewrite, split_mod, unrewrite, z_kernel
from .obstructions import abelianized_image_of_r, check_not_rf, check_not_rs
from .presentation import Presentation, cyclic_equivalent, make_G
from .quotients import element_always_trivial, enumerate_homs, same_quotient_solutions
from .words import Word

__version__ = "0.1.0"

__all__ = [
    "IndexedPresentation",
    "IndexedWord",
    "Presentation",
    "Word",
    "abelianized_image_of_r",
    "certify_theorem_A",
    "certify_theorem_C",
    "check_not_rf",
    "check_not_rs",
    "cyclic_equivalent",
    "element_always_trivial",
    "enumerate_homs",
    "height_rewrite",
    "make_G",
    "parse_presentation",
    "parse_word",
    "same_quotient_solutions",
    "serialize",
    "split_mod",
    "unrewrite",
    "verify",
    "z_kernel",
]
