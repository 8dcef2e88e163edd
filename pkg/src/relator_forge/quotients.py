"""Brute-force homomorphisms of two-generator presentations into S_m.

Permutations are in one-line notation (``p[i]`` is the image of ``i``) and
compose as functions: ``eval_word(u*v) = eval_word(u) o eval_word(v)``.

The search runs over the full grid S_m x S_m.  The inner test is compiled
with numba when available; set ``RELATOR_FORGE_BACKEND=numpy`` to force the
vectorized numpy path instead.  Both backends return the same boolean mask.
"""
from __future__ import annotations

import itertools
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .errors import UnknownGenerator
from .presentation import Presentation
from .words import Word

log = logging.getLogger(__name__)

# the system TBB is too old for numba; workqueue avoids the startup warning
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

try:
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

DEFAULT_MAX_DEGREE = 6

Permutation = tuple[int, ...]


def default_backend() -> str:
    choice = os.environ.get("RELATOR_FORGE_BACKEND", "").strip().lower()
    if choice in ("numpy", "numba"):
        if choice == "numba" and not HAVE_NUMBA:
            log.warning("numba requested but not importable; using numpy")
            return "numpy"
        return choice
    if choice:
        raise ValueError(f"RELATOR_FORGE_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    return "numba" if HAVE_NUMBA else "numpy"


def max_degree() -> int:
    raw = os.environ.get("RELATOR_FORGE_MAX_DEGREE")
    return int(raw) if raw else DEFAULT_MAX_DEGREE


@dataclass(frozen=True)
class HomSolution:
    degree: int
    images: Mapping[str, Permutation]

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.images.items()))))


def identity_perm(m: int) -> Permutation:
    return tuple(range(m))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p o q``: apply ``q`` first."""
    return tuple(p[x] for x in q)


def inverse_perm(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def eval_word(w: Word, assignment: Mapping[str, Sequence[int]]) -> Permutation:
    if not assignment:
        if w:
            raise UnknownGenerator(f"no image for {sorted(w.generators())}")
        raise ValueError("cannot infer degree from an empty assignment")
    m = len(next(iter(assignment.values())))
    result = identity_perm(m)
    for g, s in w:
        try:
            p = assignment[g]
        except KeyError:
            raise UnknownGenerator(f"no image for generator {g}") from None
        result = compose(result, p if s > 0 else inverse_perm(p))
    return result


@lru_cache(maxsize=None)
def _perm_tables(m: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(m))), dtype=np.int64).reshape(-1, m)
    inv = np.argsort(perms, axis=1).astype(np.int64)
    perms.setflags(write=False)
    inv.setflags(write=False)
    return perms, inv


def all_permutations(m: int) -> np.ndarray:
    """All of S_m in lexicographic order, shape ``(m!, m)``."""
    return _perm_tables(m)[0]


def _encode(words: Sequence[Word], gens: Sequence[str]):
    index = {g: i for i, g in enumerate(gens)}
    g_arr, s_arr, offsets = [], [], [0]
    for w in words:
        for g, s in w:
            if g not in index:
                raise UnknownGenerator(f"generator {g} is not one of {tuple(gens)}")
            g_arr.append(index[g])
            s_arr.append(s)
        offsets.append(len(g_arr))
    return (
        np.array(g_arr, dtype=np.int64),
        np.array(s_arr, dtype=np.int64),
        np.array(offsets, dtype=np.int64),
    )


if HAVE_NUMBA:

    @njit(cache=True, parallel=True)
    def _mask_numba(perms, inv, gens, signs, offsets):
        n = perms.shape[0]
        m = perms.shape[1]
        nrel = offsets.shape[0] - 1
        out = np.zeros((n, n), dtype=np.bool_)
        for i in prange(n):
            for j in range(n):
                ok = True
                for r in range(nrel):
                    lo = offsets[r]
                    hi = offsets[r + 1]
                    for x in range(m):
                        y = x
                        for t in range(hi - 1, lo - 1, -1):
                            if gens[t] == 0:
                                y = perms[i, y] if signs[t] > 0 else inv[i, y]
                            else:
                                y = perms[j, y] if signs[t] > 0 else inv[j, y]
                        if y != x:
                            ok = False
                            break
                    if not ok:
                        break
                out[i, j] = ok
        return out


def _mask_numpy(perms, inv, gens, signs, offsets):
    n, m = perms.shape
    out = np.ones((n, n), dtype=bool)
    points = np.arange(m)
    rows = np.arange(n)[:, None]
    for i in range(n):
        alive = out[i]
        for r in range(len(offsets) - 1):
            lo, hi = offsets[r], offsets[r + 1]
            cand = np.nonzero(alive)[0]
            if cand.size == 0:
                break
            y = np.broadcast_to(points, (cand.size, m)).copy()
            for t in range(hi - 1, lo - 1, -1):
                if gens[t] == 0:
                    y = (perms[i] if signs[t] > 0 else inv[i])[y]
                else:
                    table = perms[cand] if signs[t] > 0 else inv[cand]
                    y = table[rows[: cand.size], y]
            alive[cand] = (y == points).all(axis=1)
    return out


def satisfying_mask(words: Sequence[Word], gens: Sequence[str], m: int, backend: str | None = None) -> np.ndarray:
    """Boolean ``(m!, m!)`` grid: entry ``[i, j]`` says every word evaluates to the identity
    when ``gens[0] -> perms[i]`` and ``gens[1] -> perms[j]``."""
    if len(gens) != 2:
        raise ValueError("quotient search needs exactly two generators")
    if m < 1:
        raise ValueError("degree must be at least 1")
    backend = backend or default_backend()
    perms, inv = _perm_tables(m)
    g, s, off = _encode(words, gens)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        return _mask_numba(perms, inv, g, s, off)
    if backend == "numpy":
        return _mask_numpy(perms, inv, g, s, off)
    raise ValueError(f"unknown backend {backend!r}")


def _check_two_generators(p: Presentation):
    if len(p.generators) != 2:
        raise ValueError(f"expected a two-generator presentation, got {p.generators}")


def enumerate_homs(p: Presentation, m: int, backend: str | None = None) -> list[HomSolution]:
    """All ``(sigma_a, sigma_b)`` in S_m x S_m killing every relator, in lex order."""
    _check_two_generators(p)
    mask = satisfying_mask(p.relators, p.generators, m, backend)
    perms = all_permutations(m)
    ga, gb = p.generators
    out = []
    for i, j in zip(*np.nonzero(mask)):
        out.append(HomSolution(m, {ga: tuple(int(x) for x in perms[i]), gb: tuple(int(x) for x in perms[j])}))
    return out


def count_homs(p: Presentation, m: int, backend: str | None = None) -> int:
    _check_two_generators(p)
    return int(satisfying_mask(p.relators, p.generators, m, backend).sum())


def element_always_trivial(p: Presentation, e: Word, m: int, backend: str | None = None) -> bool:
    """True iff ``e`` maps to the identity under every solution of degree ``m``."""
    _check_two_generators(p)
    sols = satisfying_mask(p.relators, p.generators, m, backend)
    kills_e = satisfying_mask([e], p.generators, m, backend)
    return bool(np.all(kills_e[sols]))


def same_quotient_solutions(p1: Presentation, p2: Presentation, m: int, backend: str | None = None) -> bool:
    _check_two_generators(p1)
    _check_two_generators(p2)
    if p1.generators != p2.generators:
        return False
    m1 = satisfying_mask(p1.relators, p1.generators, m, backend)
    m2 = satisfying_mask(p2.relators, p2.generators, m, backend)
    return bool(np.array_equal(m1, m2))


def format_perm(p: Sequence[int]) -> str:
    return "[" + " ".join(str(x) for x in p) + "]"
