"""Soficity certificates as checkable derivation trees.

A :class:`Certificate` node names a closure rule, the group it concludes to be
sofic, its premises, and a list of structural side conditions with witnesses.
:func:`verify` recomputes every side condition from the node's own data and
compares it to the stored witness, so a certificate is only as trusted as the
word-level computations it can redo.

Rules (axioms have no premises):

==========================  ========  ==========================================
rule                        premises  conclusion
==========================  ========  ==========================================
AX_AMENABLE                 0         Trivial, Z
AX_BS_RES_SOLV              0         BS(l,k)
R_SUBGROUP                  1         a kernel of, or an isomorphic copy of, the premise
R_FREE_PRODUCT              >= 1      free product of the premises
R_EXT_BY_AMENABLE           2         kernel premise, amenable quotient premise (Z)
R_HNN_AMENABLE_EDGE         2         base premise, amenable edge premise
R_AMALGAM_AMENABLE_EDGE     3         left, right, amenable edge
R_LOCALLY_SOFIC             1         direct limit of the premise's stage chain
==========================  ========  ==========================================
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Iterator, Union

from .errors import NoCertificate, NotBS, SplitFailure, ZeroParameter
from .kernel import (
    IndexedPresentation,
    instantiate_range,
    split_mod,
    z_kernel,
)
from .presentation import (
    A,
    B,
    Homomorphism,
    Presentation,
    apply_hom,
    cyclic_equivalent,
    make_G,
)
from .words import Word, cyclically_reduce, exponent_sum, is_rotation, power, rotations

DEFAULT_STAGES = 3


@lru_cache(maxsize=4096)
def _family_presentation(r: Word, w: Word, l: int, k: int) -> Presentation:
    return make_G(r, w, l, k)

# --------------------------------------------------------------------------
# group descriptors


def _pres_str(p: Presentation) -> str:
    # '|' is the certificate field separator, so presentations use ':' here
    return f"<{', '.join(p.generators)} : {', '.join(str(r) for r in p.relators)}>"


@dataclass(frozen=True)
class Trivial:
    def __str__(self):
        return "Trivial"


@dataclass(frozen=True)
class CyclicZ:
    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class FinitePresentation:
    presentation: Presentation

    def __str__(self):
        return f"Pres{_pres_str(self.presentation)}"


@dataclass(frozen=True)
class IndexedKernel:
    kernel: IndexedPresentation

    def __str__(self):
        return "Kernel[" + ", ".join(str(s) for s in self.kernel.schemas) + "]"


@dataclass(frozen=True)
class BS:
    l: int
    k: int

    def __str__(self):
        return f"BS({self.l},{self.k})"


@dataclass(frozen=True)
class FreeProduct:
    factors: tuple

    def __str__(self):
        return "FreeProduct(" + "; ".join(str(f) for f in self.factors) + ")"


@dataclass(frozen=True)
class ExtensionByZ:
    kernel: "Descriptor"

    def __str__(self):
        return f"ExtByZ({self.kernel})"


@dataclass(frozen=True)
class HNN:
    base: "Descriptor"
    edge: "Descriptor"

    def __str__(self):
        return f"HNN({self.base}; edge={self.edge})"


@dataclass(frozen=True)
class Amalgam:
    left: "Descriptor"
    right: "Descriptor"
    edge: "Descriptor"

    def __str__(self):
        return f"Amalgam({self.left}; {self.right}; edge={self.edge})"


@dataclass(frozen=True)
class DirectLimit:
    """Union of a chain of stages; ``of`` is the Z-indexed group being exhausted."""

    stage: "Descriptor"
    of: IndexedPresentation

    def __str__(self):
        schemas = ", ".join(str(s) for s in self.of.schemas)
        return f"DirectLimit(stage={self.stage}; of=Kernel[{schemas}])"


@dataclass(frozen=True)
class FamilyG:
    r: Word
    w: Word
    l: int
    k: int

    def presentation(self) -> Presentation:
        return _family_presentation(self.r, self.w, self.l, self.k)

    def __str__(self):
        return f"G(r={self.r}; w={self.w}; l={self.l}; k={self.k})"


Descriptor = Union[
    Trivial, CyclicZ, FinitePresentation, IndexedKernel, BS, FreeProduct,
    ExtensionByZ, HNN, Amalgam, DirectLimit, FamilyG,
]

AMENABLE_KINDS = (Trivial, CyclicZ)

# --------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class SideCondition:
    name: str
    witness: tuple[tuple[str, str], ...] = ()

    def __str__(self):
        body = "; ".join(f"{k}={v}" for k, v in self.witness)
        return f"{self.name}[{body}]"


@dataclass(frozen=True)
class Certificate:
    rule: str
    conclusion: Descriptor
    premises: tuple["Certificate", ...] = ()
    side_conditions: tuple[SideCondition, ...] = ()
    note: str = field(default="", compare=False)

    def nodes(self) -> Iterator["Certificate"]:
        yield self
        for p in self.premises:
            yield from p.nodes()


RULES: dict[str, tuple[int | None, tuple[type, ...]]] = {
    "AX_AMENABLE": (0, (Trivial, CyclicZ)),
    "AX_BS_RES_SOLV": (0, (BS,)),
    "R_SUBGROUP": (1, (IndexedKernel, FinitePresentation)),
    "R_FREE_PRODUCT": (None, (IndexedKernel, FreeProduct)),
    "R_EXT_BY_AMENABLE": (2, (FamilyG, ExtensionByZ)),
    "R_HNN_AMENABLE_EDGE": (2, (FamilyG, HNN)),
    "R_AMALGAM_AMENABLE_EDGE": (3, (Amalgam,)),
    "R_LOCALLY_SOFIC": (1, (DirectLimit,)),
}

# (rule, conclusion kind) -> side conditions that must be present, in order
REQUIRED_CONDITIONS: dict[tuple[str, type], tuple[str, ...]] = {
    ("R_SUBGROUP", IndexedKernel): ("kernel_of",),
    ("R_SUBGROUP", FinitePresentation): ("isomorphic_copy",),
    ("R_FREE_PRODUCT", IndexedKernel): ("split_mod",),
    ("R_EXT_BY_AMENABLE", FamilyG): ("z_kernel",),
    ("R_HNN_AMENABLE_EDGE", FamilyG): ("hnn_tietze",),
    ("R_AMALGAM_AMENABLE_EDGE", Amalgam): ("cyclic_edge",),
    ("R_LOCALLY_SOFIC", DirectLimit): ("stages",),
}

NORMALIZATION = "normalize_b_inverse"
B_FLIP = {"a": A, "b": ~B}


class _Fail(Exception):
    pass


def _require(cond: bool, msg: str):
    if not cond:
        raise _Fail(msg)


# --------------------------------------------------------------------------
# Baumslag-Solitar recognition


def detect_bs(p: Presentation) -> tuple[int, int]:
    """Match ``<x, t | t^-1 x^l t x^-k>`` up to rotation and inversion.

    The stable letter ``t`` is the generator occurring exactly once with each
    sign; the second listed generator is tried first.
    """
    if len(p.generators) != 2 or len(p.relators) != 1:
        raise NotBS("not a two-generator one-relator presentation")
    core, _ = cyclically_reduce(p.relator)
    g0, g1 = p.generators
    for t, x in ((g1, g0), (g0, g1)):
        for cand in list(rotations(core)) + list(rotations(~core)):
            syl = cand.syllables()
            if (
                len(syl) == 4
                and syl[0] == (t, -1)
                and syl[2] == (t, 1)
                and syl[1][0] == x
                and syl[3][0] == x
            ):
                return syl[1][1], -syl[3][1]
    raise NotBS(f"relator {p.relator} is not of the form t^-1 x^l t x^-k")


def hnn_tietze_presentation(l: int, k: int) -> Presentation:
    """``<a_0, a_1, b | a_1^-1 a_0^l a_1 = a_0^k, b^-1 a_0 b = a_1>``."""
    a0, a1 = Word.gen("a_0"), Word.gen("a_1")
    return Presentation(
        ("a_0", "a_1", "b"),
        (~a1 * power(a0, l) * a1 * power(a0, -k), ~B * a0 * B * ~a1),
    )


def recognize_hnn_over_bs(l: int, k: int) -> "Certificate":
    """``G_{a,b}(l,k)`` as an HNN extension of ``BS(l,k)`` over ``Z``."""
    if l == 0 or k == 0:
        raise ZeroParameter("l and k must be nonzero")
    base = Certificate("AX_BS_RES_SOLV", BS(l, k))
    edge = Certificate("AX_AMENABLE", CyclicZ())
    return _build("R_HNN_AMENABLE_EDGE", FamilyG(A, B, l, k), (base, edge))


# --------------------------------------------------------------------------
# side-condition checkers: each recomputes the witness from the node


def _family_after_normalization(node: Certificate) -> FamilyG:
    fam = node.conclusion
    if any(sc.name == NORMALIZATION for sc in node.side_conditions):
        return _flip_family(fam)
    return fam


def _flip_family(fam: FamilyG) -> FamilyG:
    flip = Homomorphism(Presentation(("a", "b")), Presentation(("a", "b")), B_FLIP)
    return FamilyG(apply_hom(flip, fam.r), apply_hom(flip, fam.w), fam.l, fam.k)


def _w_normalize(node: Certificate):
    fam = node.conclusion
    _require(isinstance(fam, FamilyG), "normalization applies to family conclusions only")
    flipped = _flip_family(fam)
    flip = Homomorphism(Presentation(("a", "b")), Presentation(("a", "b")), B_FLIP)
    _require(
        apply_hom(flip, fam.presentation().relator) == flipped.presentation().relator,
        "b -> b^-1 does not carry the relator onto the normalized family",
    )
    return (("automorphism", "a->a, b->b^-1"), ("normalized", str(flipped)))


def _presented_kernel(d) -> IndexedPresentation | None:
    if isinstance(d, IndexedKernel):
        return d.kernel
    if isinstance(d, DirectLimit):
        return d.of
    return None


def _w_kernel_of(node: Certificate):
    amb = node.premises[0].conclusion
    _require(isinstance(amb, FamilyG), "ambient group must be a family member")
    ip = z_kernel(amb.presentation())
    _require(ip == node.conclusion.kernel, "kernel does not match the ambient group's Z-kernel")
    return (("ambient", str(amb)), ("kernel", str(node.conclusion)))


def _w_isomorphic_copy(node: Certificate):
    amb = node.premises[0].conclusion
    _require(isinstance(amb, FamilyG), "copy must be of a family member")
    p = node.conclusion.presentation
    _require(len(p.generators) == 2 and len(p.relators) == 1, "copy must be two-generator one-relator")
    x, y = p.generators
    target = amb.presentation()
    rename = Homomorphism(p, Presentation(("a", "b")), {x: A, y: B})
    _require(
        cyclic_equivalent(apply_hom(rename, p.relator), target.relator),
        "renamed relator is not cyclically equivalent to the family relator",
    )
    return (("renaming", f"{x}->a, {y}->b"), ("image", str(amb)))


def _w_split_mod(node: Certificate):
    n = len(node.premises)
    try:
        comps = split_mod(node.conclusion.kernel, n)
    except SplitFailure as e:
        raise _Fail(str(e)) from None
    for j, (comp, prem) in enumerate(zip(comps, node.premises)):
        _require(_presented_kernel(prem.conclusion) == comp, f"premise {j} does not present component {j}")
    schemas = ", ".join(str(s) for s in comps[0].schemas)
    return (("n", str(n)), ("component", f"Kernel[{schemas}]"))


def _w_z_kernel(node: Certificate):
    fam = _family_after_normalization(node)
    p = fam.presentation()
    _require(exponent_sum(p.relator, "b") == 0, "b has nonzero exponent sum")
    _require(isinstance(node.premises[1].conclusion, CyclicZ), "quotient must be Z")
    ip = z_kernel(p)
    _require(_presented_kernel(node.premises[0].conclusion) == ip, "kernel premise does not match the Z-kernel")
    schemas = ", ".join(str(s) for s in ip.schemas)
    return (("map", "a->1, b->z"), ("kernel", f"Kernel[{schemas}]"))


def _w_hnn_tietze(node: Certificate):
    fam = _family_after_normalization(node)
    _require(fam.r == A and fam.w == B, "HNN form is only recorded for r=a, w=b")
    base = node.premises[0].conclusion
    _require(isinstance(base, BS), "base must be a Baumslag-Solitar group")
    _require(isinstance(node.premises[1].conclusion, CyclicZ), "edge must be Z")
    t = hnn_tietze_presentation(fam.l, fam.k)
    piece = Presentation(("a_0", "a_1"), (t.relators[0],))
    try:
        params = detect_bs(piece)
    except NotBS as e:
        raise _Fail(str(e)) from None
    _require(params == (base.l, base.k) == (fam.l, fam.k), "BS parameters disagree")
    # eliminate a_1 = b^-1 a_0 b and rename a_0 -> a
    elim = Homomorphism(t, Presentation(("a", "b")), {"a_0": A, "a_1": ~B * A * B, "b": B})
    _require(not apply_hom(elim, t.relators[1]), "stable-letter relation does not vanish")
    _require(
        cyclic_equivalent(apply_hom(elim, t.relators[0]), fam.presentation().relator),
        "Tietze elimination does not recover the family relator",
    )
    return (("base", str(base)), ("edge", "Z"), ("tietze", _pres_str(t)))


def _gens_of(d) -> set[str] | None:
    if isinstance(d, FinitePresentation):
        return set(d.presentation.generators)
    if isinstance(d, Amalgam):
        left, right = _gens_of(d.left), _gens_of(d.right)
        if left is None or right is None:
            return None
        return left | right
    return None


def _w_cyclic_edge(node: Certificate):
    c = node.conclusion
    left, right = _gens_of(c.left), _gens_of(c.right)
    _require(left is not None and right is not None, "amalgam sides must be finitely presented")
    shared = left & right
    _require(len(shared) == 1, f"sides must share exactly one generator, share {sorted(shared)}")
    return (("edge_generator", shared.pop()),)


def _stage_pieces(d) -> list[Presentation]:
    if isinstance(d, FinitePresentation):
        return [d.presentation]
    if isinstance(d, Amalgam) and isinstance(d.right, FinitePresentation):
        return _stage_pieces(d.left) + [d.right.presentation]
    raise _Fail("stage is not a left-nested amalgam chain of finite pieces")


def _w_stages(node: Certificate):
    c = node.conclusion
    ip = c.of
    _require(len(ip.schemas) == 1 and ip.schemas[0].support() == {0, 1},
             "direct-limit chain needs a single schema on consecutive indices")
    pieces = _stage_pieces(c.stage)
    for j, piece in enumerate(pieces):
        _require(piece == instantiate_range(ip, j, j + 1), f"piece {j} is not the shift of the schema to {{{j}, {j + 1}}}")
    return (
        ("stages", str(len(pieces))),
        ("step", "stage s+1 = stage s amalgamated with the piece on a_s, a_s+1 over <a_s>"),
    )


CHECKERS: dict[str, Callable[[Certificate], tuple]] = {
    NORMALIZATION: _w_normalize,
    "kernel_of": _w_kernel_of,
    "isomorphic_copy": _w_isomorphic_copy,
    "split_mod": _w_split_mod,
    "z_kernel": _w_z_kernel,
    "hnn_tietze": _w_hnn_tietze,
    "cyclic_edge": _w_cyclic_edge,
    "stages": _w_stages,
}


def _structural(node: Certificate):
    """Checks that tie a conclusion to its premises without a named side condition."""
    c, prem = node.conclusion, [p.conclusion for p in node.premises]
    if node.rule == "AX_BS_RES_SOLV":
        _require(c.l != 0 and c.k != 0, "BS parameters must be nonzero")
    elif node.rule == "R_FREE_PRODUCT":
        _require(len(prem) >= 1, "free product needs at least one factor")
        if isinstance(c, FreeProduct):
            _require(tuple(c.factors) == tuple(prem), "factors differ from premises")
    elif node.rule == "R_EXT_BY_AMENABLE":
        _require(isinstance(prem[1], AMENABLE_KINDS), "quotient premise must be amenable")
        if isinstance(c, ExtensionByZ):
            _require(c.kernel == prem[0] and isinstance(prem[1], CyclicZ), "extension does not match premises")
    elif node.rule == "R_HNN_AMENABLE_EDGE":
        _require(isinstance(prem[1], AMENABLE_KINDS), "edge premise must be amenable")
        if isinstance(c, HNN):
            _require(c.base == prem[0] and c.edge == prem[1], "HNN does not match premises")
    elif node.rule == "R_AMALGAM_AMENABLE_EDGE":
        _require((c.left, c.right, c.edge) == tuple(prem), "amalgam does not match premises")
        _require(isinstance(c.edge, AMENABLE_KINDS), "edge must be amenable")
    elif node.rule == "R_LOCALLY_SOFIC":
        _require(c.stage == prem[0], "stored stage differs from the premise")


def _check_node(node: Certificate):
    _require(node.rule in RULES, f"unknown rule {node.rule!r}")
    arity, kinds = RULES[node.rule]
    _require(isinstance(node.conclusion, kinds), f"{node.rule} cannot conclude a {type(node.conclusion).__name__}")
    _require(arity is None or len(node.premises) == arity, f"{node.rule} takes {arity} premises, got {len(node.premises)}")
    required = REQUIRED_CONDITIONS.get((node.rule, type(node.conclusion)), ())
    names = tuple(sc.name for sc in node.side_conditions)
    if isinstance(node.conclusion, FamilyG) and names[:1] == (NORMALIZATION,):
        names = names[1:]
    _require(names == required, f"side conditions {names} do not match required {required}")
    _structural(node)
    for sc in node.side_conditions:
        expected = CHECKERS[sc.name](node)
        _require(sc.witness == expected, f"stored witness for {sc.name} differs from recomputation")


@dataclass(frozen=True)
class Diagnostic:
    path: tuple[int, ...]
    rule: str
    message: str

    def __str__(self):
        where = "root" if not self.path else "root." + ".".join(map(str, self.path))
        return f"{where} ({self.rule}): {self.message}"


def check(c: Certificate) -> Diagnostic | None:
    """First failing node in depth-first order, or ``None`` if all checks pass."""
    seen: dict[int, Diagnostic | None] = {}

    # cache only complete subtrees so shared premises are checked once
    def walk(node, path):
        if id(node) in seen:
            d = seen[id(node)]
            return None if d is None else Diagnostic(path + d.path, d.rule, d.message)
        try:
            _check_node(node)
        except _Fail as e:
            res = Diagnostic(path, str(node.rule), str(e))
        except Exception as e:
            res = Diagnostic(path, str(node.rule), f"{type(e).__name__}: {e}")
        else:
            res = None
            for i, p in enumerate(node.premises):
                res = walk(p, path + (i,))
                if res is not None:
                    break
        seen[id(node)] = None if res is None else Diagnostic(res.path[len(path):], res.rule, res.message)
        return res

    return walk(c, ())


def verify(c: Certificate) -> bool:
    return check(c) is None


# --------------------------------------------------------------------------
# builders


def _build(rule: str, conclusion, premises=(), note: str = "", normalize: bool = False) -> Certificate:
    names = ([NORMALIZATION] if normalize else []) + list(REQUIRED_CONDITIONS.get((rule, type(conclusion)), ()))
    node = Certificate(rule, conclusion, tuple(premises), tuple(SideCondition(n) for n in names), note)
    filled = tuple(SideCondition(sc.name, CHECKERS[sc.name](node)) for sc in node.side_conditions)
    return replace(node, side_conditions=filled)


def _with_normalization(cert: Certificate, conclusion: FamilyG) -> Certificate:
    return _build(cert.rule, conclusion, cert.premises, cert.note, normalize=True)


def _nonzero(*vals: int):
    if any(v == 0 for v in vals):
        raise ZeroParameter(f"parameters must be nonzero, got {vals}")


def _amenable_z() -> Certificate:
    return Certificate("AX_AMENABLE", CyclicZ())


def _theorem_a_positive(n: int, l: int, k: int) -> Certificate:
    hnn = recognize_hnn_over_bs(l, k)
    if n == 1:
        return hnn
    fam_1 = FamilyG(A, B, l, k)
    k_1 = IndexedKernel(z_kernel(fam_1.presentation()))
    sub = _build("R_SUBGROUP", k_1, (hnn,))
    fam_n = FamilyG(A, power(B, n), l, k)
    k_n = IndexedKernel(z_kernel(fam_n.presentation()))
    free = _build("R_FREE_PRODUCT", k_n, (sub,) * n)
    return _build("R_EXT_BY_AMENABLE", fam_n, (free, _amenable_z()))


def certify_theorem_A(n: int, l: int, k: int) -> Certificate:
    """Certificate that ``G_{a,b^n}(l,k)`` is sofic."""
    _nonzero(n, l, k)
    cert = _theorem_a_positive(abs(n), l, k)
    if n < 0:
        cert = _with_normalization(cert, FamilyG(A, power(B, n), l, k))
    return cert


def conjugated_w(n: int) -> Word:
    """``b^-n a b^n``."""
    return power(B, -n) * A * power(B, n)


def _direct_limit(ip: IndexedPresentation, l: int, k: int, stages: int) -> Certificate:
    base = certify_theorem_A(1, l, k)
    pieces = [
        _build("R_SUBGROUP", FinitePresentation(instantiate_range(ip, j, j + 1)), (base,))
        for j in range(stages)
    ]
    stage = pieces[0]
    for piece in pieces[1:]:
        stage = _build(
            "R_AMALGAM_AMENABLE_EDGE",
            Amalgam(stage.conclusion, piece.conclusion, CyclicZ()),
            (stage, piece, _amenable_z()),
        )
    return _build("R_LOCALLY_SOFIC", DirectLimit(stage.conclusion, ip), (stage,))


def certify_theorem_C(n: int, l: int, k: int, stages: int = DEFAULT_STAGES) -> Certificate:
    """Certificate that ``G_{a,b^-n a b^n}(l,k)`` is sofic."""
    _nonzero(n, l, k)
    if stages < 1:
        raise ValueError("need at least one stage")
    m = abs(n)
    fam = FamilyG(A, conjugated_w(m), l, k)
    k_n = z_kernel(fam.presentation())
    h = split_mod(k_n, m)[0]
    limit = _direct_limit(h, l, k, stages)
    free = _build("R_FREE_PRODUCT", IndexedKernel(k_n), (limit,) * m)
    note = (
        "pieces are the two-generator groups <a_j, a_j+1 : (a_j^l)^(a_j^a_j+1) = a_j^k>, "
        "copies of G_{a,b}(l,k) rather than of G_{a,b^n}(l,k); "
        "the chain amalgamates them over the cyclic groups <a_j>"
    )
    root = _build("R_EXT_BY_AMENABLE", fam, (free, _amenable_z()), note=note)
    if n < 0:
        root = _with_normalization(root, FamilyG(A, conjugated_w(n), l, k))
    return root


# --------------------------------------------------------------------------
# recognizing the two certified families from a presentation


@dataclass(frozen=True)
class FamilyMatch:
    theorem: str  # "A" (w = b^n) or "C" (w = b^-n a b^n)
    n: int
    l: int
    k: int

    @property
    def family(self) -> FamilyG:
        w = power(B, self.n) if self.theorem == "A" else conjugated_w(self.n)
        return FamilyG(A, w, self.l, self.k)


def _ordered(values) -> list[int]:
    return sorted(set(values), key=lambda v: (abs(v), v < 0))


def _exact_match(fam: FamilyG) -> FamilyMatch | None:
    if fam.r != A or 0 in (fam.l, fam.k):
        return None
    syl = fam.w.syllables()
    if len(syl) == 1 and syl[0][0] == "b":
        return FamilyMatch("A", syl[0][1], fam.l, fam.k)
    if len(syl) == 3 and syl[1] == ("a", 1) and syl[0][0] == syl[2][0] == "b" and syl[0][1] == -syl[2][1]:
        return FamilyMatch("C", syl[2][1], fam.l, fam.k)
    return None


def recognize_family(p: Presentation, hint: FamilyG | None = None) -> FamilyMatch | None:
    """Find ``(n, l, k)`` with ``p``'s relator cyclically equivalent to a certified family.

    A ``hint`` already of the form ``r = a, w = b^n`` or ``w = b^-n a b^n`` is
    taken as is.  Otherwise ``(l, k)`` and ``(-l, -k)`` always match together;
    positive ``l`` wins, then exact rotations over ones needing inversion.
    """
    if hint is not None:
        exact = _exact_match(hint)
        if exact is not None:
            return exact
    if set(p.generators) != {"a", "b"} or len(p.relators) != 1:
        return None
    rel = p.relator
    core, _ = cyclically_reduce(rel)
    if exponent_sum(core, "b") != 0 or not core:
        return None
    # rotate to a syllable boundary so runs wrapping around the end are merged
    cut = next((i for i in range(len(core)) if core[i][0] != core[i - 1][0]), 0)
    syl = Word._trusted(core.letters[cut:] + core.letters[:cut]).syllables()
    b_exps = [e for g, e in syl if g == "b"]
    a_exps = [e for g, e in syl if g == "a"]
    if not b_exps or not a_exps:
        return None
    ns = _ordered([s * abs(e) for e in b_exps for s in (1, -1)])
    lk = _ordered([s * abs(e) for e in a_exps for s in (1, -1)])
    matches = []
    for theorem in ("A", "C"):
        for n in ns:
            for l in lk:
                for k in lk:
                    cand = FamilyMatch(theorem, n, l, k)
                    if cyclic_equivalent(cand.family.presentation().relator, rel):
                        matches.append(cand)
    if not matches:
        return None
    return min(
        matches,
        key=lambda c: (c.l < 0, not is_rotation(c.family.presentation().relator, rel)),
    )


def certify(p: Presentation, stages: int = DEFAULT_STAGES, hint: FamilyG | None = None) -> tuple[FamilyMatch, Certificate]:
    """Certificate for ``p`` if it is one of the two certified families."""
    match = recognize_family(p, hint)
    if match is None:
        raise NoCertificate("no certificate rule applies")
    if match.theorem == "A":
        return match, certify_theorem_A(match.n, match.l, match.k)
    return match, certify_theorem_C(match.n, match.l, match.k, stages)


# --------------------------------------------------------------------------
# serialization


def serialize(c: Certificate) -> str:
    """Depth-indented lines ``RULE | descriptor | condition[...] | ...``."""
    lines: list[str] = []

    def emit(node: Certificate, depth: int):
        fields = [node.rule, str(node.conclusion)] + [str(sc) for sc in node.side_conditions]
        if node.note:
            fields.append(f"note: {node.note}")
        lines.append("  " * depth + " | ".join(fields))
        for p in node.premises:
            emit(p, depth + 1)

    emit(c, 0)
    return "\n".join(lines) + "\n"
