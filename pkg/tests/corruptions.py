"""Single-node corruptions of a certificate tree.

Nodes are addressed by path (premise indices from the root) so a premise
shared by reference is corrupted at one occurrence only; the rest of the tree
keeps the original objects.
"""
from dataclasses import replace

from relator_forge.certify import (
    BS,
    RULES,
    Amalgam,
    Certificate,
    CyclicZ,
    DirectLimit,
    FamilyG,
    FinitePresentation,
    IndexedKernel,
    SideCondition,
    Trivial,
)
from relator_forge.kernel import IndexedWord, IndexedPresentation, instantiate_range
from relator_forge.presentation import B
from relator_forge.words import Word

_OTHER_KERNEL = IndexedPresentation((IndexedWord.from_syllables([(1, -1), (0, 5), (1, 1), (0, -7)]),))


def paths(c, prefix=()):
    yield prefix
    for i, p in enumerate(c.premises):
        yield from paths(p, prefix + (i,))


def node_at(c, path):
    for i in path:
        c = c.premises[i]
    return c


def replace_at(c, path, new):
    if not path:
        return new
    i = path[0]
    prem = list(c.premises)
    prem[i] = replace_at(prem[i], path[1:], new)
    return replace(c, premises=tuple(prem))


def conclusion_variants(d):
    out = [Trivial(), CyclicZ(), BS(9, 11)]
    if isinstance(d, FamilyG):
        out += [replace(d, l=d.l + 1), replace(d, k=d.k + 1), replace(d, w=d.w * B), replace(d, r=~d.r)]
    elif isinstance(d, BS):
        out += [BS(d.l + 1, d.k), BS(d.k, d.l)]
    elif isinstance(d, IndexedKernel):
        out += [IndexedKernel(_OTHER_KERNEL)]
    elif isinstance(d, FinitePresentation):
        p = d.presentation
        x = Word.gen(p.generators[0])
        out += [FinitePresentation(replace(p, relators=(p.relator * x,))),
                FinitePresentation(replace(p, generators=p.generators[::-1]))]
    elif isinstance(d, Amalgam):
        out += [Amalgam(d.right, d.left, d.edge), Amalgam(d.left, d.right, Trivial())]
    elif isinstance(d, DirectLimit):
        out += [DirectLimit(d.stage, _OTHER_KERNEL)]
        if isinstance(d.stage, Amalgam):
            out += [DirectLimit(d.stage.left, d.of)]
        else:
            out += [DirectLimit(FinitePresentation(instantiate_range(d.of, 1, 2)), d.of)]
    return [x for x in out if x != d]


def side_condition_variants(node):
    scs = node.side_conditions
    out = []
    for i, sc in enumerate(scs):
        bad = sc.witness[:-1] + ((sc.witness[-1][0], sc.witness[-1][1] + "x"),) if sc.witness else (("x", "y"),)
        out.append(("perturb-witness", scs[:i] + (SideCondition(sc.name, bad),) + scs[i + 1:]))
        out.append(("drop-condition", scs[:i] + scs[i + 1:]))
        out.append(("duplicate-condition", scs[:i + 1] + (sc,) + scs[i + 1:]))
    out.append(("add-condition", scs + (SideCondition("kernel_of", (("ambient", "?"),)),)))
    return out


def node_mutations(node, full=True):
    """(kind, replacement node) pairs, each a corruption of ``node`` alone."""
    rules = [r for r in RULES if r != node.rule]
    if not full:
        rules = rules[:2]
    for r in rules:
        yield f"rule->{r}", replace(node, rule=r)
    concl = conclusion_variants(node.conclusion)
    for d in concl if full else concl[:2]:
        yield f"conclusion->{d}", replace(node, conclusion=d)
    for kind, scs in side_condition_variants(node):
        yield kind, replace(node, side_conditions=scs)
    if node.premises:
        yield "drop-premise", replace(node, premises=node.premises[:-1])
        yield "duplicate-premise", replace(node, premises=node.premises + node.premises[-1:])
    else:
        yield "add-premise", replace(node, premises=(Certificate("AX_AMENABLE", CyclicZ()),))


def corruptions(cert, full=True):
    """Every single-node corruption of ``cert``: (path, kind, corrupted tree)."""
    for path in paths(cert):
        node = node_at(cert, path)
        for kind, new in node_mutations(node, full):
            yield path, kind, replace_at(cert, path, new)
