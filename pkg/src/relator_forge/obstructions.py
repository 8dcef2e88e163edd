"""Non-residual-finiteness and non-residual-solvability verdicts.

Verdicts are Proved or Unknown, never Refuted: nothing here ever claims
that a group in the family *is* residually finite or solvable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import CommutingPair, ZeroParameter
from .presentation import check_noncommuting, family_relator
from .words import Word, abelianize, commutator, conjugate, power

PROVED = "Proved"
UNKNOWN = "Unknown"

BM3T_DIRECT = {(1, 2), (-1, -2), (2, 1), (-2, -1)}
BM3T_MIXED = {(1, -2), (-1, 2), (2, -1), (-2, 1)}


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str = ""
    reason: str = ""
    witness: Word | None = None
    transcript: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.status == PROVED and not self.rule:
            raise ValueError("a Proved verdict must name the rule that fired")

    @property
    def proved(self) -> bool:
        return self.status == PROVED

    def __str__(self) -> str:
        if self.proved:
            return f"{self.status} ({self.rule}): {self.reason}"
        return f"{self.status}: {self.reason}"


def _nonzero(l: int, k: int):
    if l == 0 or k == 0:
        raise ZeroParameter(f"l and k must be nonzero, got l={l}, k={k}")


def check_not_rf(l: int, k: int) -> Verdict:
    _nonzero(l, k)
    if (l, k) in BM3T_DIRECT:
        return Verdict(
            PROVED, "BM3T-direct",
            f"(l,k)=({l},{k}) is a direct case of BM3T Theorem 1: r dies in every finite quotient",
        )
    if (l, k) in BM3T_MIXED:
        return Verdict(
            PROVED, "BM3T-mixed",
            f"(l,k)=({l},{k}) has mixed signs; relies on BM3T Lemma 1 extending to x^y = x^-2 "
            "(hedged: argued, not restated in full)",
        )
    if abs(l) != abs(k) and abs(l) >= 2 and abs(k) >= 2:
        return Verdict(
            PROVED, "Meskin",
            f"|l|={abs(l)} and |k|={abs(k)} differ and both exceed 1 (Meskin Theorem B)",
        )
    return Verdict(UNKNOWN, reason=f"no non-RF rule covers (l,k)=({l},{k})")


def not_rs_transcript(r: Word, w: Word, l: int, k: int) -> tuple[bool, tuple[str, ...]]:
    """Free-group identities showing ``r^(k-l)`` is a commutator modulo the relator.

    Checks ``[r^l, r^w]^-1 r^-l (r^l)^(r^w) = 1`` and
    ``[r^l, r^w] r^(l-k) = (relator)^(r^l)``, both exactly in F.
    """
    rl = power(r, l)
    rw = conjugate(r, w)
    comm = commutator(rl, rw)
    identity = ~comm * power(r, -l) * conjugate(rl, rw)
    relator = family_relator(r, w, l, k)
    lhs = comm * power(r, l - k)
    rhs = conjugate(relator, rl)
    lines = (
        f"[r^l, r^w] = {comm}",
        f"[r^l, r^w]^-1 r^-l (r^l)^(r^w) = {identity}",
        f"[r^l, r^w] r^{l - k} = {lhs}",
        f"(relator)^(r^l) = {rhs}",
    )
    return (not identity) and lhs == rhs, lines


def check_not_rs(r: Word, w: Word, l: int, k: int) -> Verdict:
    _nonzero(l, k)
    if not check_noncommuting(r, w):
        raise CommutingPair(f"r={r} and w={w} commute")
    if k == l + 1:
        element, label = r, "r"
    elif k == l - 1:
        element, label = ~r, "r^-1"
    else:
        return Verdict(UNKNOWN, reason=f"k - l = {k - l} is not +1 or -1")
    ok, lines = not_rs_transcript(r, w, l, k)
    if not ok:
        return Verdict(UNKNOWN, reason="identity check failed", transcript=lines)
    return Verdict(
        PROVED, "derived-series",
        f"{label} = [r^l, r^w] in G, so {label} lies in every derived subgroup",
        witness=element,
        transcript=lines,
    )


def order_in_quotient(x: tuple[int, int], u: tuple[int, int]):
    """Order of ``x`` in ``Z^2 / <u>``; ``math.inf`` when infinite."""
    if x == (0, 0):
        return 1
    if u == (0, 0):
        return math.inf
    if x[0] * u[1] - x[1] * u[0] != 0:
        return math.inf
    # x = (p/q) u with gcd(p, q) = 1; the order is q
    i = 0 if u[0] != 0 else 1
    p, q = x[i], u[i]
    g = math.gcd(p, q)
    return abs(q // g)


def abelianized_image_of_r(r: Word, l: int, k: int, generators=("a", "b")):
    """Order of the image of ``r`` in the abelianization of ``G_{r,w}(l,k)``."""
    _nonzero(l, k)
    ab = abelianize(r)
    extra = set(ab) - set(generators)
    if extra:
        raise ValueError(f"r uses generators outside {generators}: {sorted(extra)}")
    v = tuple(ab.get(g, 0) for g in generators)
    u = tuple((l - k) * c for c in v)
    return order_in_quotient(v, u)
