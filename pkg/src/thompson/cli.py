"""Command-line interface.

Operands are file paths, or inline notation given with ``-e``; both kinds
may be mixed and are consumed in the order given.

Exit codes: 0 success/true, 1 false, 2 parse error, 3 precondition
violated, 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import genmax, notation, structure
from .addresses import format_address, parse_address
from .elements import apply_to_address, compose, invert
from .errors import NotationError, PreconditionError, ResourceError
from .randgen import PROFILES, random_element

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BOUND = range(5)


class _Operand(argparse.Action):
    def __init__(self, option_strings, dest, kind="file", **kwargs):
        self.kind = kind
        super().__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        ops = getattr(namespace, "operands", None) or []
        if isinstance(values, str):
            values = [values]
        ops.extend((self.kind, v) for v in values)
        namespace.operands = ops


# name -> (number of operands, help)
COMMANDS = {
    "compose": (2, "product F G (apply F, then G)"),
    "invert": (1, "inverse of F"),
    "reduce": (1, "reduced form of F"),
    "eq": (2, "exit 0 if F and G are equal, 1 otherwise"),
    "eval": (2, "image of address ADDR under F"),
    "order": (1, "order of F"),
    "in-t": (1, "exit 0 if F lies in T"),
    "in-f": (1, "exit 0 if F lies in F"),
    "cycles": (1, "cycle decomposition of a finite-order F"),
    "swaps": (1, "even-length swap decomposition of F"),
    "interleave": (1, "conjugate F to an interleaved permutation"),
    "shape": (4, "element of T taking ALPHAS on tree A onto BETAS on tree B"),
    "dcoset": (1, "double-coset invariant of F"),
    "maximal": (2, "certificate writing TARGET over A and T"),
    "verify": (2, "check certificate CERT against generator A"),
    "random": (0, "print a seeded random element"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompson", description="Thompson's groups F < T < V on Cantor space.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(operands=[])
        p.add_argument("paths", nargs="*", action=_Operand, kind="file",
                       help="operand files")
        p.add_argument("-e", dest="inline", action=_Operand, kind="inline",
                       metavar="TEXT", help="inline operand")
        if name in ("compose", "invert", "reduce", "random"):
            p.add_argument("--style", choices=(notation.PAIRS, notation.CYCLES),
                           default=notation.PAIRS)
        if name in ("order", "cycles", "interleave"):
            p.add_argument("--bound", type=int, default=structure.DEFAULT_BOUND,
                           help="leaf bound for the finite-order search")
        if name == "maximal":
            p.add_argument("-o", dest="output", help="write the certificate here")
        if name == "random":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--leaves", type=int, default=8)
            p.add_argument("--profile", choices=PROFILES, default="general")
    return parser


def _text(operand: tuple[str, str]) -> str:
    kind, value = operand
    if kind == "inline":
        return value
    return Path(value).read_text(encoding="utf-8")


def _element(operand):
    return notation.parse_element(_text(operand))


def run(args, out) -> int:
    ops = args.operands
    wanted = COMMANDS[args.command][0]
    if len(ops) != wanted:
        print(f"{args.command}: expected {wanted} operand(s), got {len(ops)}", file=sys.stderr)
        return EXIT_PARSE
    cmd = args.command

    def emit(text=""):
        print(text, file=out)

    if cmd == "compose":
        emit(notation.print_element(compose(_element(ops[0]), _element(ops[1])), args.style))
    elif cmd == "invert":
        emit(notation.print_element(invert(_element(ops[0])), args.style))
    elif cmd == "reduce":
        emit(notation.print_element(_element(ops[0]), args.style))
    elif cmd == "eq":
        same = _element(ops[0]) == _element(ops[1])
        emit("true" if same else "false")
        return EXIT_OK if same else EXIT_FALSE
    elif cmd == "eval":
        g = _element(ops[0])
        addr = parse_address(ops[1][1] if ops[1][0] == "inline" else _text(ops[1]))
        emit(format_address(apply_to_address(g, addr)))
    elif cmd == "order":
        order = structure.order_of(_element(ops[0]), args.bound)
        if order is None:
            emit("no finite-order witness within bound")
            return EXIT_BOUND
        emit(str(order))
    elif cmd in ("in-t", "in-f"):
        test = structure.in_T if cmd == "in-t" else structure.in_F
        result = test(_element(ops[0]))
        emit("true" if result else "false")
        return EXIT_OK if result else EXIT_FALSE
    elif cmd == "cycles":
        emit(str(structure.cycle_decomposition(_element(ops[0]), args.bound)))
    elif cmd == "swaps":
        for a, b in genmax.swap_decompose(_element(ops[0])):
            emit(f"({format_address(a)} {format_address(b)})")
    elif cmd == "interleave":
        g = _element(ops[0])
        word, h = structure.interleave(g, args.bound)
        emit("conjugate: " + notation.print_element(h.element(), notation.CYCLES))
        emit("tree: " + notation.format_antichain(h.tree))
        emit("conjugator:")
        for tok in word:
            emit("T: " + notation.one_line(tok.payload) if tok.payload is not None else tok.kind)
    elif cmd == "shape":
        A = notation.parse_antichain(_text(ops[0]))
        alphas = notation.parse_address_list(_text(ops[1]))
        B = notation.parse_antichain(_text(ops[2]))
        betas = notation.parse_address_list(_text(ops[3]))
        emit(notation.print_element(structure.shape_in_T(A, alphas, B, betas)))
    elif cmd == "dcoset":
        emit(str(genmax.double_coset_invariant(_element(ops[0]))))
    elif cmd == "maximal":
        cert = genmax.maximality_certificate(_element(ops[0]), _element(ops[1]))
        text = notation.format_certificate(cert)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            out.write(text)
    elif cmd == "verify":
        cert = notation.parse_certificate(_text(ops[0]))
        problems = genmax.certificate_problems(cert, _element(ops[1]))
        for p in problems:
            emit("FAIL: " + p)
        emit("verified" if not problems else "not verified")
        return EXIT_OK if not problems else EXIT_FALSE
    elif cmd == "random":
        g = random_element(args.seed, args.leaves, args.profile)
        emit(notation.print_element(g, args.style))
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return run(args, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotationError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except PreconditionError as exc:
        print(f"precondition violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
