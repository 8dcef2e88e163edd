"""Finite presentations, the ``G_{r,w}(l,k)`` family, and homomorphism checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import CommutingPair, SignatureMismatch, UnknownGenerator, ZeroExponent
from .words import (
    Word,
    check_generator,
    commutator,
    conjugate,
    cyclic_normal_form,
    power,
)

A = Word.gen("a")
B = Word.gen("b")


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators; each relator ``R`` stands for ``R = 1``."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(self.relators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)
        for g in gens:
            check_generator(g)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generators in {gens}")
        allowed = set(gens)
        for r in rels:
            extra = r.generators() - allowed
            if extra:
                raise UnknownGenerator(f"relator {r} uses unknown generator(s) {sorted(extra)}")

    @property
    def relator(self) -> Word:
        if len(self.relators) != 1:
            raise ValueError("presentation does not have exactly one relator")
        return self.relators[0]

    def canonical(self) -> "Presentation":
        return Presentation(self.generators, tuple(cyclic_normal_form(r) for r in self.relators))

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"


@dataclass(frozen=True, eq=True)
class Homomorphism:
    source: Presentation
    target: Presentation
    images: Mapping[str, Word] = field(hash=False)

    def __post_init__(self):
        images = dict(self.images)
        for g in self.source.generators:
            if g not in images:
                raise ValueError(f"no image given for generator {g}")
        for g, img in images.items():
            if g not in self.source.generators:
                raise UnknownGenerator(f"{g} is not a generator of the source")
            extra = img.generators() - set(self.target.generators)
            if extra:
                raise UnknownGenerator(f"image of {g} uses non-target generator(s) {sorted(extra)}")
        object.__setattr__(self, "images", images)


def identity_hom(p: Presentation) -> Homomorphism:
    return Homomorphism(p, p, {g: Word.gen(g) for g in p.generators})


def check_noncommuting(r: Word, w: Word) -> bool:
    return bool(commutator(r, w))


def family_relator(r: Word, w: Word, l: int, k: int) -> Word:
    """Reduced form of ``(r^l)^(r^w) * r^-k``."""
    rw = conjugate(r, w)
    return ~rw * power(r, l) * rw * power(r, -k)


def make_G(r: Word, w: Word, l: int, k: int) -> Presentation:
    """The one-relator group ``<a, b | (r^l)^(r^w) = r^k>``."""
    if l == 0 or k == 0:
        raise ZeroExponent(f"exponents must be nonzero, got l={l}, k={k}")
    extra = (r.generators() | w.generators()) - {"a", "b"}
    if extra:
        raise UnknownGenerator(f"r and w must be words over a, b; found {sorted(extra)}")
    if not check_noncommuting(r, w):
        raise CommutingPair(f"r={r} and w={w} commute")
    return Presentation(("a", "b"), (family_relator(r, w, l, k),))


def baumslag_group() -> Presentation:
    return make_G(A, B, 1, 2)


def apply_hom(h: Homomorphism, w: Word) -> Word:
    out = Word()
    for g, s in w:
        try:
            img = h.images[g]
        except KeyError:
            raise UnknownGenerator(f"{g} is not a generator of the source") from None
        out = out * (img if s > 0 else ~img)
    return out


def verify_hom_pair_inverse(h1: Homomorphism, h2: Homomorphism) -> bool:
    """True iff ``h2 . h1`` and ``h1 . h2`` fix every generator."""
    if h1.target != h2.source or h2.target != h1.source:
        raise SignatureMismatch("h1 and h2 are not composable in both orders")
    for g in h1.source.generators:
        if apply_hom(h2, apply_hom(h1, Word.gen(g))) != Word.gen(g):
            return False
    for g in h2.source.generators:
        if apply_hom(h1, apply_hom(h2, Word.gen(g))) != Word.gen(g):
            return False
    return True


def canonical_relator(w: Word) -> Word:
    return cyclic_normal_form(w)


def cyclic_equivalent(u: Word, v: Word) -> bool:
    """Equal up to free/cyclic reduction, cyclic rotation and inversion."""
    return cyclic_normal_form(u) == cyclic_normal_form(v)


def hom_respects_relators(h: Homomorphism) -> bool:
    """Sufficient check that ``h`` is well defined.

    ``False`` means "not verified", not "not a homomorphism".
    """
    targets = {cyclic_normal_form(r) for r in h.target.relators}
    for rel in h.source.relators:
        img = apply_hom(h, rel)
        if img and cyclic_normal_form(img) not in targets:
            return False
    return True
