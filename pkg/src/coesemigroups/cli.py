"""Command-line entry point.

JSON goes to stdout; domain errors print one line to stderr and exit 1;
usage errors exit 2 (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .coe import chain_to_full, classify_monoid, coe_closure, is_coe
from .constructions import double_lift, ed3_formulas, med_lift, wilf_transfer_check
from .core import (
    GeneratorSet,
    from_generators,
    small_count,
    to_json_dict,
    wilf_holds,
)
from .errors import SemigroupError
from .oracle import census
from .trees import EnumerationBound, Family, TreeSpec, enumerate_tree, to_dot, to_jsonl


def _gens(text: str) -> GeneratorSet:
    try:
        return GeneratorSet.parse(text)
    except SemigroupError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return int(text)


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cmd_info(args: argparse.Namespace) -> str:
    return _dump(to_json_dict(from_generators(args.gens)))


def _cmd_is_coe(args: argparse.Namespace) -> str:
    S = from_generators(args.gens)
    return _dump({"msg": list(S.msg), "is_coe": is_coe(S)})


def _cmd_chain(args: argparse.Namespace) -> str:
    chain = chain_to_full(from_generators(args.gens))
    return _dump({"length": chain.length, "links": [list(S.msg) for S in chain.links]})


def _cmd_closure(args: argparse.Namespace) -> str:
    return _dump(coe_closure(args.gens).to_json_dict())


def _cmd_classify(args: argparse.Namespace) -> str:
    M = classify_monoid(args.gens)
    if M is None:
        return _dump({"coe_monoid": False})
    return _dump({"coe_monoid": True, **M.to_json_dict()})


def _cmd_tree(args: argparse.Namespace) -> str:
    family = Family(args.family)
    bound = EnumerationBound(args.max_genus, args.max_depth, args.max_nodes)
    spec = TreeSpec(family, args.param, bound)
    nodes = enumerate_tree(spec, threads=args.threads)
    text = to_dot(nodes) if args.format == "dot" else to_jsonl(nodes)
    return text.rstrip("\n")


def _cmd_med_lift(args: argparse.Namespace) -> str:
    return _dump(med_lift(from_generators(args.gens), args.x).report())


def _cmd_double_lift(args: argparse.Namespace) -> str:
    return _dump(double_lift(from_generators(args.gens), args.s).report())


def _cmd_ed3(args: argparse.Namespace) -> str:
    if len(args.gens) != 3:
        raise SemigroupError(f"ed3 needs exactly three generators, got {list(args.gens)}")
    frob, gen = ed3_formulas(*args.gens)
    S = from_generators(args.gens)
    return _dump(
        {
            "msg": list(S.msg),
            "predicted": {"frobenius": frob, "genus": gen},
            "computed": {"frobenius": S.frobenius, "genus": S.genus},
            "symmetric": 2 * S.genus == S.frobenius + 1,
        }
    )


def _cmd_wilf(args: argparse.Namespace) -> str:
    S = from_generators(args.gens)
    out: dict[str, object] = {
        "msg": list(S.msg),
        "small": small_count(S),
        "wilf": wilf_holds(S),
    }
    if args.s is not None:
        out["transfer"] = wilf_transfer_check(S, args.s).to_json_dict()
    return _dump(out)


def _cmd_census(args: argparse.Namespace) -> str:
    rows = census(args.max_genus)
    return _dump({"counts": [{"genus": g, "all": a, "coe": c} for g, a, c in rows]})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coesemigroups", description="Coe-semigroup toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def gens_cmd(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("gens", type=_gens, help="comma-separated generators, e.g. 4,6,7")
        p.set_defaults(func=func)
        return p

    gens_cmd("info", _cmd_info, "msg, Frobenius number, genus, multiplicity")
    gens_cmd("is-coe", _cmd_is_coe, "Coe predicate")
    gens_cmd("chain", _cmd_chain, "chain of Frobenius fillings up to N")
    gens_cmd("closure", _cmd_closure, "smallest Coe-monoid containing a set")
    gens_cmd("classify", _cmd_classify, "is the generated monoid a Coe-monoid?")
    gens_cmd("med-lift", _cmd_med_lift, "({x}+S) u {0}").add_argument("x", type=_nonneg)
    gens_cmd("double-lift", _cmd_double_lift, "2S u ({2s+1}+2S)").add_argument("s", type=_nonneg)
    gens_cmd("ed3", _cmd_ed3, "closed forms for embedding dimension 3")
    gens_cmd("wilf-check", _cmd_wilf, "Wilf inequality and its transfer").add_argument(
        "s", type=_nonneg, nargs="?"
    )

    tree = sub.add_parser("tree", help="enumerate a tree of Coe-semigroups")
    tree.add_argument("--family", choices=[f.value for f in Family], default="all")
    tree.add_argument("--param", type=_nonneg)
    tree.add_argument("--max-genus", type=_nonneg)
    tree.add_argument("--max-depth", type=_nonneg)
    tree.add_argument("--max-nodes", type=_nonneg)
    tree.add_argument("--format", choices=["jsonl", "dot"], default="jsonl")
    tree.add_argument("--threads", type=_nonneg, default=1)
    tree.set_defaults(func=_cmd_tree)

    oracle = sub.add_parser("oracle", help="brute-force checks")
    oracle_sub = oracle.add_subparsers(dest="oracle_command", required=True)
    cen = oracle_sub.add_parser("census", help="per-genus counts of all and of Coe-semigroups")
    cen.add_argument("--max-genus", type=_nonneg, required=True)
    cen.set_defaults(func=_cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
