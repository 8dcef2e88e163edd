"""Symbolic checks of the family's structural lemmas.

* not residually solvable when ``k = l +- 1`` (free identity behind ``r = [r^l, r^w]``);
* ``G_{r,w}(l,k) = G_{r,w}(-l,-k)`` and ``G_{r,w}(l,k) = G_{r^-1,w}(k,l)``;
* ``G_{a,a^n w}(l,k) = G_{a,w}(l,k) = G_{a,w a^n}(l,k)`` for ``w`` beginning
  and ending with a power of ``b``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .obstructions import not_rs_transcript
from .presentation import (
    A,
    B,
    Homomorphism,
    check_noncommuting,
    cyclic_equivalent,
    hom_respects_relators,
    make_G,
    verify_hom_pair_inverse,
)
from .words import Word, power

DEFAULT_LK_GRID = ((1, 2), (2, 3), (2, 1), (-1, -2))
ABSORPTION_WORDS = ("b", "b^2", "b a b")


@dataclass(frozen=True)
class LemmaResult:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def not_rs_identity_holds(r: Word, w: Word, l: int) -> bool:
    ok, _ = not_rs_transcript(r, w, l, l + 1)
    return ok


def sign_flip_isomorphism(r: Word, w: Word, l: int, k: int) -> bool:
    """Identity maps on ``a, b`` between ``G(l,k)`` and ``G(-l,-k)`` are mutually inverse."""
    g1 = make_G(r, w, l, k)
    g2 = make_G(r, w, -l, -k)
    ident = {"a": A, "b": B}
    eta = Homomorphism(g1, g2, ident)
    xi = Homomorphism(g2, g1, ident)
    return (
        verify_hom_pair_inverse(eta, xi)
        and hom_respects_relators(eta)
        and hom_respects_relators(xi)
        and cyclic_equivalent(g1.relator, ~g2.relator)
    )


def inverse_root_isomorphism(r: Word, w: Word, l: int, k: int) -> bool:
    """``G_{r,w}(l,k)`` and ``G_{r^-1,w}(k,l)`` share a relator up to rotation and inversion."""
    g1 = make_G(r, w, l, k)
    g2 = make_G(~r, w, k, l)
    ident = {"a": A, "b": B}
    eta = Homomorphism(g1, g2, ident)
    xi = Homomorphism(g2, g1, ident)
    return (
        cyclic_equivalent(g1.relator, g2.relator)
        and verify_hom_pair_inverse(eta, xi)
        and hom_respects_relators(eta)
        and hom_respects_relators(xi)
    )


def conjugator_absorption(w: Word, n: int, l: int, k: int) -> bool:
    """Relators for conjugators ``a^n w`` and ``w a^n`` match the one for ``w``."""
    base = make_G(A, w, l, k).relator
    left = make_G(A, power(A, n) * w, l, k).relator
    right = make_G(A, w * power(A, n), l, k).relator
    return cyclic_equivalent(left, base) and cyclic_equivalent(right, base)


def random_word(rng: random.Random, max_len: int, gens=("a", "b")) -> Word:
    letters = []
    for _ in range(rng.randint(1, max_len)):
        letters.append((rng.choice(gens), rng.choice((1, -1))))
    return Word(letters)


def random_noncommuting_pair(rng: random.Random, max_len: int = 8) -> tuple[Word, Word]:
    while True:
        r = random_word(rng, max_len)
        w = random_word(rng, max_len)
        if check_noncommuting(r, w):
            return r, w


def run_lemma_suite(samples: int = 1000, seed: int = 0, lk_grid=DEFAULT_LK_GRID) -> list[LemmaResult]:
    from .dsl import parse_word

    rng = random.Random(seed)
    results = []

    failures = 0
    for _ in range(samples):
        r, w = random_noncommuting_pair(rng)
        if not not_rs_identity_holds(r, w, rng.randint(1, 4)):
            failures += 1
    results.append(LemmaResult(
        "not-RS identity",
        failures == 0,
        f"{samples - failures}/{samples} random pairs (|r|,|w| <= 8, 1 <= l <= 4, k = l+1)",
    ))

    checked = failed = 0
    for l, k in lk_grid:
        for r, w in ((A, B),):
            checked += 2
            failed += not sign_flip_isomorphism(r, w, l, k)
            failed += not inverse_root_isomorphism(r, w, l, k)
    results.append(LemmaResult(
        "sign and inversion isomorphisms",
        failed == 0,
        f"{checked - failed}/{checked} checks over (l,k) in {list(lk_grid)}",
    ))

    checked = failed = 0
    for text in ABSORPTION_WORDS:
        w = parse_word(text)
        for n in (-3, -2, -1, 1, 2, 3):
            for l, k in lk_grid:
                checked += 1
                failed += not conjugator_absorption(w, n, l, k)
    results.append(LemmaResult(
        "conjugator absorption",
        failed == 0,
        f"{checked - failed}/{checked} checks for w in {list(ABSORPTION_WORDS)}, n in -3..3 (n != 0)",
    ))
    return results
