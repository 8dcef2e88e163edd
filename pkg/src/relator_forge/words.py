"""Words in a free group.

A :class:`Word` is an immutable, always freely reduced sequence of letters.
A letter is a pair ``(name, sign)`` with ``sign`` in ``{+1, -1}``.  Generators
are plain strings; any name matching ``[a-z][a-z0-9_]*`` is allowed.

Ordering of words is lexicographic over the flat letter sequence, letters
compared first by generator name and then with ``+1`` before ``-1``.
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator

GENERATOR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

Letter = tuple[str, int]


def check_generator(name: str) -> str:
    if not isinstance(name, str) or not GENERATOR_RE.match(name):
        raise ValueError(f"invalid generator name: {name!r}")
    return name


def letter_key(letter: Letter) -> tuple[str, int]:
    return (letter[0], 0 if letter[1] > 0 else 1)


def _free_reduce(raw: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, sign in raw:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


class Word:
    """Freely reduced word; the empty word is the identity and prints as ``1``."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: tuple[Letter, ...] = _free_reduce(letters)
        self._hash = None

    @classmethod
    def _trusted(cls, letters: tuple[Letter, ...]) -> "Word":
        # caller guarantees the letters are already reduced
        w = cls.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        check_generator(name)
        sign = 1 if exp > 0 else -1
        return cls._trusted(((name, sign),) * abs(exp))

    @classmethod
    def from_syllables(cls, syllables: Iterable[tuple[str, int]]) -> "Word":
        """Build from ``(name, exponent)`` pairs, e.g. ``[("a", 2), ("b", -1)]``."""
        raw: list[Letter] = []
        for name, exp in syllables:
            check_generator(name)
            sign = 1 if exp > 0 else -1
            raw.extend([(name, sign)] * abs(exp))
        return cls(raw)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def sort_key(self) -> tuple:
        return tuple(letter_key(x) for x in self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Word") -> bool:
        return self.sort_key() <= other.sort_key()

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        left = list(self.letters)
        right = other.letters
        i = 0
        while left and i < len(right):
            g, s = right[i]
            if left[-1][0] == g and left[-1][1] == -s:
                left.pop()
                i += 1
            else:
                break
        return Word._trusted(tuple(left) + right[i:])

    def __invert__(self) -> "Word":
        return Word._trusted(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def syllables(self) -> list[tuple[str, int]]:
        """Maximal runs as ``(name, exponent)`` pairs."""
        out: list[list] = []
        for g, s in self.letters:
            if out and out[-1][0] == g:
                out[-1][1] += s
            else:
                out.append([g, s])
        return [(g, e) for g, e in out]

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.syllables():
            parts.append(g if e == 1 else f"{g}^{e}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


_IDENTITY = Word._trusted(())


def reduce(raw: Iterable[Letter]) -> Word:
    return Word(raw)


def invert(w: Word) -> Word:
    return ~w


def conjugate(x: Word, y: Word) -> Word:
    """``x^y = y^-1 x y``."""
    return ~y * x * y


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x^-1 y^-1 x y``."""
    return ~x * ~y * x * y


def power(w: Word, n: int) -> Word:
    if n < 0:
        w, n = ~w, -n
    result = _IDENTITY
    base = w
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    """Return ``(core, conjugator)`` with ``w == conjugate(core, conjugator)``."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    core = Word._trusted(letters[i : j + 1])
    conjugator = Word._trusted(letters[j + 1 :])
    return core, conjugator


def rotations(w: Word) -> Iterator[Word]:
    """All cyclic rotations of a cyclically reduced word."""
    letters = w.letters
    if not letters:
        yield w
        return
    for i in range(len(letters)):
        yield Word._trusted(letters[i:] + letters[:i])


@lru_cache(maxsize=8192)
def cyclic_normal_form(w: Word) -> Word:
    """Least rotation of the cyclic core or of its inverse."""
    core, _ = cyclically_reduce(w)
    n = len(core.letters)
    if n == 0:
        return core
    best = None
    for cand in (core.letters, (~core).letters):
        keys = [letter_key(x) for x in cand]
        keys += keys
        for i in range(n):
            k = keys[i : i + n]
            if best is None or k < best[0]:
                best = (k, cand[i:] + cand[:i])
    return Word._trusted(best[1])


def is_rotation(u: Word, v: Word) -> bool:
    """True iff the cyclic cores of ``u`` and ``v`` agree up to rotation (no inversion)."""
    cu, _ = cyclically_reduce(u)
    cv, _ = cyclically_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu.letters:
        return True
    doubled = cu.letters + cu.letters
    n = len(cv.letters)
    return any(doubled[i : i + n] == cv.letters for i in range(len(cu.letters)))


def exponent_sum(w: Word, g: str) -> int:
    return sum(s for name, s in w.letters if name == g)


def abelianize(w: Word) -> dict[str, int]:
    """Exponent-sum vector over the generators occurring in ``w``, sorted by name."""
    sums: dict[str, int] = {}
    for g, s in w.letters:
        sums[g] = sums.get(g, 0) + s
    return {g: sums[g] for g in sorted(sums)}
