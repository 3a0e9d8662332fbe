"""Command-line front end.

Diagram operands are JSON files given positionally or DSL strings given with
``--expr``; positional files come first, then expressions, in the order
written.  ``compose A B`` prints ``A ∘ B`` (``B`` runs first).

Exit status: 0 on success, 1 on domain errors (mismatched boundaries, unknown
colors, singular matrices, ...), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from itertools import product

from . import diagram as dg
from . import plotting
from .dsl import parse_expr
from .errors import CbrError, ParseError
from .io import diagram_to_json, dumps, load_diagram, load_json, load_representation
from .quantize import field_set_from_json, state_sum
from .represent import eval_diagram, is_faithful, verify_relations


def _colors(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(k < 0 for k in out):
        raise argparse.ArgumentTypeError("colors and dimensions must be non-negative")
    return out


def _operands(args, count: int) -> list[dg.Diagram]:
    diagrams = [load_diagram(p) for p in args.operands]
    diagrams += [parse_expr(e) for e in args.expr or []]
    if len(diagrams) != count:
        raise ParseError(f"{args.command} takes {count} diagram operand(s), got {len(diagrams)}")
    return diagrams


def _nf_json(nf: dg.NormalForm) -> dict:
    keyed = lambda d: {str(k): v for k, v in sorted(d.items())}
    return {"dom": list(nf.dom), "cod": list(nf.cod), "loops": keyed(nf.loops),
            "alpha": list(nf.alpha), "beta": list(nf.beta),
            "cups": keyed(nf.cups), "caps": keyed(nf.caps), "through": keyed(nf.through)}


def cmd_compose(args):
    a, b = _operands(args, 2)
    return diagram_to_json(dg.compose(a, b))


def cmd_tensor(args):
    a, b = _operands(args, 2)
    return diagram_to_json(dg.tensor(a, b))


def cmd_nf(args):
    (a,) = _operands(args, 1)
    return _nf_json(dg.normal_form(a))


def cmd_eval(args):
    (a,) = _operands(args, 1)
    return eval_diagram(load_representation(args.rep), a).to_json()


def cmd_check_faithful(args):
    faithful, witness = is_faithful(args.dims)
    out = {"faithful": faithful}
    if witness is not None:
        out["witness"] = witness
    return out


def cmd_verify_relations(args):
    rep = load_representation(args.rep)
    palette = args.palette if args.palette is not None else tuple(sorted(rep.colors))
    report = verify_relations(rep, palette)
    return {"all_pass": all(r.passed for r in report),
            "relations": [r.to_json() for r in report]}


def cmd_enumerate(args):
    max_loops = 0 if args.loop_free else args.max_loops
    colors = sorted(set(args.dom) | set(args.cod))
    base = dg.enumerate_loop_free(args.dom, args.cod)
    found = []
    for exps in product(range(max_loops + 1), repeat=len(colors)):
        loops = dg.loops_diagram(dict(zip(colors, exps)))
        found.extend(dg.tensor(loops, f) for f in base)
    return {"count": len(found), "diagrams": [diagram_to_json(f) for f in found]}


def cmd_state_sum(args):
    fs = field_set_from_json(load_json(args.fields))
    return {"state_sum": state_sum(fs).to_json()}


def cmd_render(args, stdout):
    (a,) = _operands(args, 1)
    if args.out:
        path = plotting.save(a, args.out, None if args.format is None else args.format)
        return {"format": args.format or path.suffix.lstrip("."), "path": str(path)}
    stdout.write(plotting.render(a, args.format or "svg"))
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbr", description="Work with chromatic Brauer diagrams from the command line.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_operands(p):
        p.add_argument("operands", nargs="*", metavar="FILE", help="diagram JSON file")
        p.add_argument("--expr", action="append", metavar="DSL", help="diagram expression")
        return p

    with_operands(sub.add_parser("compose", help="A ∘ B (B runs first)"))
    with_operands(sub.add_parser("tensor", help="A ⊗ B"))
    with_operands(sub.add_parser("nf", help="normal form"))
    p = with_operands(sub.add_parser("eval", help="matrix of a diagram"))
    p.add_argument("--rep", required=True, help="representation JSON file")
    p = sub.add_parser("check-faithful", help="decide faithfulness from dimensions")
    p.add_argument("--dims", type=_colors, required=True, metavar="d0,d1,...")
    p = sub.add_parser("verify-relations", help="check A1-A5 under a representation")
    p.add_argument("--rep", required=True)
    p.add_argument("--palette", type=_colors, metavar="k0,k1,...")
    p = sub.add_parser("enumerate", help="list morphisms between two objects")
    p.add_argument("--dom", type=_colors, required=True)
    p.add_argument("--cod", type=_colors, required=True)
    p.add_argument("--loop-free", action="store_true")
    p.add_argument("--max-loops", type=int, default=0,
                   help="also list loops up to this multiplicity per boundary color")
    p = sub.add_parser("state-sum", help="state sum of a field file")
    p.add_argument("--fields", required=True)
    p = with_operands(sub.add_parser("render", help="draw a diagram"))
    p.add_argument("--format", choices=["svg", "tikz", "png", "pdf"])
    p.add_argument("--out", help="write the figure here and print a JSON summary")
    return parser


COMMANDS = {
    "compose": cmd_compose, "tensor": cmd_tensor, "nf": cmd_nf, "eval": cmd_eval,
    "check-faithful": cmd_check_faithful, "verify-relations": cmd_verify_relations,
    "enumerate": cmd_enumerate, "state-sum": cmd_state_sum,
}


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "render":
            if args.out is None and args.format in ("png", "pdf"):
                raise ParseError("png and pdf output needs --out")
            result = cmd_render(args, stdout)
        else:
            result = COMMANDS[args.command](args)
    except ParseError as exc:
        stderr.write(f"cbr {args.command}: {exc}\n")
        return 2
    except CbrError as exc:
        stderr.write(f"cbr {args.command}: {exc}\n")
        return 1
    if result is not None:
        stdout.write(dumps(result) + "\n")
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
