"""Kernel of the exponent-sum map onto Z.

For a presentation on ``a, b`` whose relators have zero ``b``-exponent sum,
the kernel of ``a -> 1, b -> z`` is generated by the conjugates
``a_i = b^-i a b^i``.  Relators are rewritten over the ``a_i`` by tracking the
height of each ``a``-letter; each rewritten relator is a *schema* standing for
the whole family of its index shifts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import NonzeroExponentSum, SplitFailure, UnknownGenerator, WindowTooSmall
from .presentation import Presentation
from .words import Word, exponent_sum

DEFAULT_WINDOW = 8

IndexedLetter = tuple[int, int]


def _reduce_indexed(raw: Iterable[IndexedLetter]) -> tuple[IndexedLetter, ...]:
    stack: list[IndexedLetter] = []
    for idx, sign in raw:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1][0] == idx and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((idx, sign))
    return tuple(stack)


def index_name(i: int, prefix: str = "a") -> str:
    """Generator name for ``a_i``; negative indices use ``m`` (``a_m2``)."""
    return f"{prefix}_{i}" if i >= 0 else f"{prefix}_m{-i}"


class IndexedWord:
    """Freely reduced word in the letters ``a_i^{+-1}``."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[IndexedLetter] = ()):
        self.letters: tuple[IndexedLetter, ...] = _reduce_indexed(letters)

    @classmethod
    def from_syllables(cls, syllables: Iterable[tuple[int, int]]) -> "IndexedWord":
        raw: list[IndexedLetter] = []
        for idx, exp in syllables:
            raw.extend([(idx, 1 if exp > 0 else -1)] * abs(exp))
        return cls(raw)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[IndexedLetter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexedWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "IndexedWord") -> "IndexedWord":
        return IndexedWord(self.letters + other.letters)

    def __invert__(self) -> "IndexedWord":
        return IndexedWord((i, -s) for i, s in reversed(self.letters))

    def support(self) -> set[int]:
        return {i for i, _ in self.letters}

    def syllables(self) -> list[tuple[int, int]]:
        out: list[list[int]] = []
        for i, s in self.letters:
            if out and out[-1][0] == i:
                out[-1][1] += s
            else:
                out.append([i, s])
        return [(i, e) for i, e in out]

    def normalized(self) -> "IndexedWord":
        """Translate so the least occurring index is 0."""
        if not self.letters:
            return self
        return shift(self, -min(self.support()))

    def to_word(self, prefix: str = "a") -> Word:
        """Read ``a_i`` as an ordinary generator named by :func:`index_name`."""
        return Word((index_name(i, prefix), s) for i, s in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"a_{i}" if e == 1 else f"a_{i}^{e}" for i, e in self.syllables())

    def __repr__(self) -> str:
        return f"IndexedWord({str(self)!r})"


def shift(iw: IndexedWord, d: int) -> IndexedWord:
    """Conjugation by ``b^d``: every index goes up by ``d``."""
    out = IndexedWord.__new__(IndexedWord)
    out.letters = tuple((i + d, s) for i, s in iw.letters)
    return out


def height_rewrite(w: Word, base: str = "a", stable: str = "b") -> IndexedWord:
    if exponent_sum(w, stable) != 0:
        raise NonzeroExponentSum(f"{stable} has exponent sum {exponent_sum(w, stable)} in {w}")
    h = 0
    out: list[IndexedLetter] = []
    for g, s in w:
        if g == stable:
            h -= s
        elif g == base:
            out.append((h, s))
        else:
            raise UnknownGenerator(f"unexpected generator {g} (expected {base}, {stable})")
    return IndexedWord(out)


def unrewrite(iw: IndexedWord, base: str = "a", stable: str = "b") -> Word:
    raw = []
    for i, s in iw:
        sb = 1 if i > 0 else -1
        raw.extend([(stable, -sb)] * abs(i))
        raw.append((base, s))
        raw.extend([(stable, sb)] * abs(i))
    return Word(raw)


@dataclass(frozen=True)
class IndexedPresentation:
    """Z-family of relators ``{shift(R, i)}`` for each schema ``R``.

    Schemas are stored normalized (least index 0).  ``window`` is only the
    default truncation for :func:`instantiate` and takes no part in equality.
    """

    schemas: tuple[IndexedWord, ...]
    window: int = field(default=DEFAULT_WINDOW, compare=False)

    def __post_init__(self):
        schemas = tuple(s.normalized() for s in self.schemas)
        for s in schemas:
            if not s:
                raise ValueError("relator schemas must be nonempty")
        if self.window < 1:
            raise ValueError("window must be positive")
        object.__setattr__(self, "schemas", schemas)

    def __str__(self) -> str:
        rels = ", ".join(str(s) for s in self.schemas)
        return f"<a_i (i in Z) | shifts of {rels}>"


def z_kernel(p: Presentation, base: str = "a", stable: str = "b") -> IndexedPresentation:
    if set(p.generators) != {base, stable}:
        raise UnknownGenerator(f"expected generators {{{base}, {stable}}}, got {p.generators}")
    return IndexedPresentation(tuple(height_rewrite(r, base, stable) for r in p.relators))


def split_mod(ip: IndexedPresentation, n: int) -> list[IndexedPresentation]:
    """Split the kernel into ``n`` free factors by grouping indices mod ``n``.

    Every schema must live in one residue class; component ``j`` holds the
    shifts landing in class ``j``, reindexed by ``i -> (i - j) / n``.  Since
    schemas are normalized to start at 0 every component gets the same schemas.
    """
    if n < 1:
        raise ValueError("n must be positive")
    reindexed = []
    for s in ip.schemas:
        if any(i % n for i in s.support()):
            raise SplitFailure(s, n)
        reindexed.append(IndexedWord((i // n, sg) for i, sg in s))
    return [IndexedPresentation(tuple(reindexed), ip.window) for _ in range(n)]


def unreindex(iw: IndexedWord, n: int, j: int) -> IndexedWord:
    """Inverse of the component reindexing: ``i -> n*i + j``."""
    return IndexedWord((n * i + j, s) for i, s in iw)


def shifted_family(ip: IndexedPresentation, lo: int, hi: int) -> list[IndexedWord]:
    """All shifts of all schemas whose support lies in ``[lo, hi]``."""
    out = []
    for s in ip.schemas:
        width = max(s.support())
        for d in range(lo, hi - width + 1):
            out.append(shift(s, d))
    return out


def instantiate_range(ip: IndexedPresentation, lo: int, hi: int) -> Presentation:
    rels = shifted_family(ip, lo, hi)
    if not rels:
        raise WindowTooSmall(f"no relator shift fits in [{lo}, {hi}]")
    gens = tuple(index_name(i) for i in range(lo, hi + 1))
    return Presentation(gens, tuple(r.to_word() for r in rels))


def instantiate(ip: IndexedPresentation, N: int | None = None) -> Presentation:
    """Finite truncation on generators ``a_-N .. a_N``."""
    if N is None:
        N = ip.window
    if N < 1:
        raise WindowTooSmall("window must be at least 1")
    return instantiate_range(ip, -N, N)
