"""Command-line front end.

Exit status: 0 on success / Proved / certificate found, 2 on Unknown / no
certificate / no split, 1 on errors (reported on stderr).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import certify as cert_mod
from .dsl import parse_presentation, parse_word
from .errors import RelatorForgeError, SplitFailure
from .kernel import split_mod, z_kernel
from .lemmas import run_lemma_suite
from .obstructions import abelianized_image_of_r, check_not_rf, check_not_rs
from .presentation import Presentation, check_noncommuting, make_G
from .quotients import (
    all_permutations,
    element_always_trivial,
    format_perm,
    max_degree,
    same_quotient_solutions,
    satisfying_mask,
)
from .words import Word, exponent_sum

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2


class CLIError(RelatorForgeError):
    pass


@dataclass
class Target:
    presentation: Presentation
    family: tuple[Word, Word, int, int] | None = None


def split_top_level(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_family(text: str) -> tuple[Word, Word, int, int]:
    parts = split_top_level(text)
    if len(parts) != 4:
        raise CLIError(f"--family expects 'r,w,l,k', got {text!r}")
    r, w = parse_word(parts[0]), parse_word(parts[1])
    try:
        l, k = int(parts[2]), int(parts[3])
    except ValueError:
        raise CLIError(f"l and k must be integers in --family {text!r}") from None
    return r, w, l, k


def resolve_target(args) -> Target:
    given = [x for x in (args.presentation, args.file, args.family) if x is not None]
    if len(given) != 1:
        raise CLIError("give exactly one of: an inline presentation, --file, --family")
    if args.family is not None:
        r, w, l, k = parse_family(args.family)
        return Target(make_G(r, w, l, k), (r, w, l, k))
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.presentation
    p = parse_presentation(text)
    match = cert_mod.recognize_family(p)
    fam = None
    if match is not None:
        f = match.family
        fam = (f.r, f.w, f.l, f.k)
    return Target(p, fam)


def _family_str(fam) -> str:
    r, w, l, k = fam
    return f"G(r={r}; w={w}; l={l}; k={k})"


def cmd_analyze(args, out) -> int:
    t = resolve_target(args)
    p = t.presentation
    out.write(f"presentation: {p}\n")
    for i, rel in enumerate(p.relators):
        sums = ", ".join(f"{g}={exponent_sum(rel, g)}" for g in sorted(p.generators))
        out.write(f"relator {i}: length {len(rel)}; exponent sums {sums}\n")
    if t.family is not None:
        r, w, _, _ = t.family
        out.write(f"family: {_family_str(t.family)}\n")
        out.write(f"r, w noncommuting: {'yes' if check_noncommuting(r, w) else 'no'}\n")
    hint = cert_mod.FamilyG(*t.family) if t.family is not None else None
    match = cert_mod.recognize_family(p, hint)
    if match is None:
        out.write("certified family: none\n")
    else:
        shape = "b^n" if match.theorem == "A" else "b^-n a b^n"
        out.write(f"certified family: w = {shape} with n={match.n}, l={match.l}, k={match.k}\n")
    return EXIT_OK


def cmd_kernel(args, out) -> int:
    t = resolve_target(args)
    ip = z_kernel(t.presentation)
    out.write("kernel of a -> 1, b -> z; generators a_i = b^-i a b^i (i in Z)\n")
    for s in ip.schemas:
        out.write(f"schema: {s}\n")
    return EXIT_OK


def cmd_split(args, out) -> int:
    t = resolve_target(args)
    ip = z_kernel(t.presentation)
    try:
        comps = split_mod(ip, args.n)
    except SplitFailure as e:
        out.write(f"NO SPLIT: schema {e.schema} mixes residue classes mod {e.n}\n")
        return EXIT_UNKNOWN
    out.write(f"free product of {len(comps)} components\n")
    for j, comp in enumerate(comps):
        schemas = ", ".join(str(s) for s in comp.schemas)
        out.write(f"component {j}: {schemas}\n")
    return EXIT_OK


def cmd_certify(args, out) -> int:
    t = resolve_target(args)
    try:
        hint = cert_mod.FamilyG(*t.family) if t.family is not None else None
        _, c = cert_mod.certify(t.presentation, stages=args.stages, hint=hint)
    except cert_mod.NoCertificate:
        out.write("UNKNOWN: no certificate rule applies\n")
        return EXIT_UNKNOWN
    out.write(cert_mod.serialize(c))
    diag = cert_mod.check(c)
    if diag is not None:
        out.write(f"verify: FAILED at {diag}\n")
        return EXIT_ERROR
    out.write("verify: ok\n")
    return EXIT_OK


def cmd_obstruct(args, out) -> int:
    t = resolve_target(args)
    if t.family is None:
        out.write("UNKNOWN: family parameters not recognized; use --family r,w,l,k\n")
        return EXIT_UNKNOWN
    r, w, l, k = t.family
    out.write(f"group: {_family_str(t.family)}\n")
    rf = check_not_rf(l, k)
    rs = check_not_rs(r, w, l, k)
    out.write(f"NotRF: {rf}\n")
    out.write(f"NotRS: {rs}\n")
    for line in rs.transcript:
        out.write(f"  {line}\n")
    order = abelianized_image_of_r(r, l, k)
    out.write(f"order of r in the abelianization: {order}\n")
    return EXIT_OK if (rf.proved or rs.proved) else EXIT_UNKNOWN


def cmd_quotients(args, out, err) -> int:
    t = resolve_target(args)
    p = t.presentation
    cap = args.max_degree if args.max_degree is not None else max_degree()
    m = args.degree
    if m > cap:
        raise CLIError(f"degree {m} exceeds the cap {cap} (raise it with --max-degree or RELATOR_FORGE_MAX_DEGREE)")
    if m >= 7:
        err.write(f"warning: degree {m} searches {len(all_permutations(m)) ** 2} pairs\n")
    mask = satisfying_mask(p.relators, p.generators, m)
    perms = all_permutations(m)
    ga, gb = p.generators
    n_sol = int(mask.sum())
    out.write(f"presentation: {p}\n")
    out.write(f"degree: {m}; pairs searched: {mask.size}; solutions: {n_sol}\n")
    if not args.no_table:
        out.write(f"{ga} | {gb}\n")
        for i, j in zip(*mask.nonzero()):
            out.write(f"{format_perm(perms[i])} | {format_perm(perms[j])}\n")
    element = args.element
    if element is None and t.family is not None:
        element = str(t.family[0])
    if element is not None:
        e = parse_word(element, p.generators)
        triv = element_always_trivial(p, e, m)
        out.write(f"element {e} trivial under every solution: {'yes' if triv else 'no'}\n")
    if args.compare is not None:
        q = parse_presentation(args.compare)
        same = same_quotient_solutions(p, q, m)
        out.write(f"same solutions as {q}: {'yes' if same else 'no'}\n")
    return EXIT_OK


def cmd_lemmas(args, out) -> int:
    results = run_lemma_suite(samples=args.samples, seed=args.seed)
    for res in results:
        out.write(f"{res}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relator-forge",
        description="Kernels, soficity certificates, obstructions and finite-quotient probes "
        "for the one-relator groups G_{r,w}(l,k) = <a, b | (r^l)^(r^w) = r^k>.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_target(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("presentation", nargs="?", help="inline presentation, e.g. '<a,b | a = [a, a^b]>'")
        sp.add_argument("--file", help="read the presentation from a file")
        sp.add_argument("--family", help="family shorthand 'r,w,l,k', e.g. 'a,b^2,1,2'")
        return sp

    with_target("analyze", help_="exponent sums, noncommuting check, family detection")
    with_target("kernel", help_="print the Z-kernel relator schemas")
    sp = with_target("split", help_="split the Z-kernel into a free product mod n")
    sp.add_argument("--n", type=int, required=True)
    sp = with_target("certify", help_="emit and verify a soficity certificate")
    sp.add_argument("--stages", type=int, default=cert_mod.DEFAULT_STAGES)
    with_target("obstruct", help_="non-RF and non-RS verdicts")
    sp = with_target("quotients", help_="enumerate homomorphisms into S_m")
    sp.add_argument("--degree", "-m", type=int, required=True)
    sp.add_argument("--element", help="word to test for triviality in every solution (default: r)")
    sp.add_argument("--compare", help="second presentation whose solution set is compared")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--no-table", action="store_true")
    sp = sub.add_parser("lemmas", help="run the structural lemma checks")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr
    handlers = {
        "analyze": cmd_analyze,
        "kernel": cmd_kernel,
        "split": cmd_split,
        "certify": cmd_certify,
        "obstruct": cmd_obstruct,
        "lemmas": cmd_lemmas,
    }
    try:
        if args.verb == "quotients":
            return cmd_quotients(args, out, err)
        return handlers[args.verb](args, out)
    except (RelatorForgeError, OSError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
