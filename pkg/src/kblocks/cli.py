"""Command-line interface: ``kblocks <command> [options]``.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 bad input
or an exceeded budget, 3 a negative ``decide`` (or ``witness`` when a
k-block exists).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import formats
from .analysis import PreconditionError, TangleViolation, t_shaped_equivalence_report, tangle_from_set
from .blocks import (block_number, block_width_certificate, find_all_blocks, find_blocks,
                     verify_decomposition)
from .connectivity import InvalidPairError, kappa_bounded
from .corpus import GENERATORS, ConstructionError, random_graph
from .decision import decide_k_block, verify_witness
from .graph import Graph
from .inseparability import preprocess, preprocess_full
from .oracle import DEFAULT_BUDGET, BudgetExceededError, canonical_blocks, oracle_blocks

EXIT_OK, EXIT_FAIL, EXIT_ERROR, EXIT_NO = 0, 1, 2, 3


class CliError(Exception):
    """A one-line diagnostic for the user; exits with code 2."""


# -- plumbing -------------------------------------------------------------------

def _load_graph(args) -> Graph:
    if args.input in (None, "-"):
        return formats.read_graph(sys.stdin, args.input_format)
    try:
        with open(args.input, encoding="utf-8") as fh:
            return formats.read_graph(fh, args.input_format, args.input)
    except OSError as err:
        raise CliError(f"cannot read {args.input}: {err.strerror}") from None


def _write(args, text: str) -> None:
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as err:
        raise CliError(f"cannot write {args.output}: {err.strerror}") from None


def _need_k(args) -> int:
    if args.k is None:
        raise CliError(f"{args.command} needs -k")
    if args.k < 1:
        raise CliError("k must be at least 1")
    return args.k


def _emit(args, doc: dict, text: str, dot: str | None = None) -> None:
    if args.format == "json":
        _write(args, formats.dumps(doc))
    elif args.format == "dot":
        if dot is None:
            raise CliError(f"{args.command} has no DOT output")
        _write(args, dot)
    else:
        _write(args, text if text.endswith("\n") else text + "\n")


def _fmt_set(items) -> str:
    return " ".join(str(x) for x in items)


def _parse_set(g: Graph, text: str) -> frozenset:
    out = set()
    for token in text.replace(",", " ").split():
        try:
            out.add(g.index(token))
        except KeyError:
            raise CliError(f"unknown vertex {token!r}") from None
    return frozenset(out)


# -- commands -------------------------------------------------------------------

def cmd_blocks(args) -> int:
    g = _load_graph(args)
    k = _need_k(args)
    hk = preprocess(g, k, workers=args.parallel) if k <= g.n else None
    blocks, dec = find_blocks(g, k, hk)
    doc = formats.report("blocks", g, k, blocks=formats.blocks_json(g, blocks),
                         decomposition=formats.decomposition_json(g, dec, blocks))
    text = "\n".join(_fmt_set(b) for b in formats.blocks_json(g, blocks)) or "(no blocks)"
    _emit(args, doc, text, formats.emit_dot(dec, blocks))
    return EXIT_OK


def cmd_all_blocks(args) -> int:
    g = _load_graph(args)
    table = None
    if args.kappa_table:
        try:
            with open(args.kappa_table, encoding="utf-8") as fh:
                table = formats.kappa_table_from_json(g, json.load(fh))
        except OSError as err:
            raise CliError(f"cannot read {args.kappa_table}: {err.strerror}") from None
        except json.JSONDecodeError as err:
            raise CliError(f"{args.kappa_table}: invalid JSON ({err.msg})") from None
    result = find_all_blocks(g, table=table, workers=args.parallel)
    payload = {str(k): formats.blocks_json(g, b) for k, b in result.items()}
    lines = [f"{k}: " + " | ".join(_fmt_set(b) for b in formats.blocks_json(g, b)) for k, b in result.items()]
    _emit(args, formats.report("all-blocks", g, blocks_by_k=payload), "\n".join(lines) or "(empty graph)")
    return EXIT_OK


def cmd_decide(args) -> int:
    g = _load_graph(args)
    k = _need_k(args)
    d = decide_k_block(g, k)
    if d.has_block:
        doc = formats.report("decide", g, k, has_block=True, certificate=g.label_set(d.certificate))
        text = "yes: " + _fmt_set(g.label_set(d.certificate))
    else:
        doc = formats.report("decide", g, k, has_block=False, witness=formats.witness_json(g, d.witness))
        text = f"no: witness of {len(d.witness)} separations\n" + _witness_text(g, d.witness)
    _emit(args, doc, text)
    return EXIT_OK if d.has_block else EXIT_NO


def _witness_text(g, w) -> str:
    return "\n".join(f"A={_fmt_set(g.label_set(s.a))} ; B={_fmt_set(g.label_set(s.b))}"
                     for s in w.separations)


def cmd_witness(args) -> int:
    g = _load_graph(args)
    k = _need_k(args)
    d = decide_k_block(g, k)
    if d.has_block:
        print(f"graph has a {k}-block ({_fmt_set(g.label_set(d.certificate))}); no witness exists",
              file=sys.stderr)
        return EXIT_NO
    check = verify_witness(g, d.witness)
    doc = formats.report("witness", g, k, witness=formats.witness_json(g, d.witness),
                         report={"verified": check.ok, "mode": check.mode,
                                 "size": len(d.witness), "bound": max(4 * (g.n - k) - 1, 0)})
    _emit(args, doc, _witness_text(g, d.witness) or "(empty witness)")
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_beta(args) -> int:
    g = _load_graph(args)
    beta = block_number(g)
    _emit(args, formats.report("beta", g, beta=beta), str(beta))
    return EXIT_OK


def cmd_bw(args) -> int:
    g = _load_graph(args)
    beta, dec = block_width_certificate(g)
    doc = formats.report("bw", g, beta=beta, bw=beta,
                         decomposition=formats.decomposition_json(g, dec))
    text = f"{beta}\nadhesion {dec.adhesion}, width {dec.width}, {len(dec.leaves())} leaves"
    _emit(args, doc, text, formats.emit_dot(dec))
    return EXIT_OK


def cmd_tangle(args) -> int:
    g = _load_graph(args)
    k = _need_k(args)
    x = _parse_set(g, args.set) if args.set else g.vertex_set
    result = tangle_from_set(g, x, k, budget=args.budget)
    if isinstance(result, TangleViolation):
        seps = [formats.separation_json(g, s) for s in result.separations]
        doc = formats.report("tangle", g, k, report={"tangle": False, "axiom": result.axiom,
                                                     "message": result.message, "separations": seps})
        text = f"violation of {result.axiom}: {result.message}\n" + "\n".join(
            f"small side {_fmt_set(s['a'])}" for s in seps)
    else:
        doc = formats.report("tangle", g, k, report={"tangle": True, "defining_set": g.label_set(x),
                                                     "oriented": len(result.oriented)})
        text = f"tangle of order {k}: {len(result.oriented)} proper separations oriented"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_tshaped(args) -> int:
    g = _load_graph(args)
    k = _need_k(args)
    rep = t_shaped_equivalence_report(g, k, budget=args.budget)
    body = {"separates_blocks": rep.every_separation_separates_blocks, "no_t_shaped": rep.no_t_shaped,
            "equivalent": rep.equivalent, "separations": rep.n_separations, "blocks": rep.n_blocks}
    if rep.t_shaped is not None:
        body["t_shaped"] = {"target": formats.separation_json(g, rep.t_shaped.target),
                            "witness": formats.separation_json(g, rep.t_shaped.witness)}
    if rep.lonely_side is not None:
        body["lonely"] = formats.separation_json(g, rep.lonely_side)
    text = "\n".join(f"{key}: {body[key]}" for key in
                     ("separates_blocks", "no_t_shaped", "equivalent", "separations", "blocks"))
    _emit(args, formats.report("tshaped", g, k, report=body), text)
    return EXIT_OK


def cmd_gen(args) -> int:
    name = args.name
    params = args.params
    if name == "random":
        if len(params) != 2:
            raise CliError("random needs N P")
        try:
            n, p = int(params[0]), float(params[1])
        except ValueError:
            raise CliError("random needs an integer N and a probability P") from None
        g = random_graph(n, p, random.Random(args.seed))
    elif name in GENERATORS:
        try:
            ints = [int(x) for x in params]
        except ValueError:
            raise CliError(f"{name} takes integer parameters") from None
        try:
            out = GENERATORS[name](*ints)
        except TypeError as err:
            raise CliError(f"bad parameters for {name}: {err}") from None
        g = out[0] if isinstance(out, tuple) else out
    else:
        raise CliError(f"unknown generator {name!r}; choose from random, {', '.join(sorted(GENERATORS))}")
    text = formats.emit_dimacs(g) if args.graph_format == "dimacs" else formats.emit_edge_list(g)
    _write(args, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    k = _need_k(args)
    if args.witness:
        try:
            with open(args.witness, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as err:
            raise CliError(f"cannot read {args.witness}: {err.strerror}") from None
        except json.JSONDecodeError as err:
            raise CliError(f"{args.witness}: invalid JSON ({err.msg})") from None
        if "witness" not in doc:
            raise CliError(f"{args.witness} holds no witness")
        w = formats.witness_from_json(g, k, doc["witness"])
        check = verify_witness(g, w)
        body = {"verified": check.ok, "mode": check.mode, "problems": check.problems,
                "counterexample": None if check.counterexample is None else g.label_set(check.counterexample)}
        ok = check.ok
    else:
        blocks, dec = find_blocks(g, k)
        rep = verify_decomposition(g, dec, k, blocks)
        body = {"structure_ok": rep.structure_ok, "clauses": rep.clauses, "problems": rep.problems,
                "verified": rep.ok}
        ok = rep.ok
    text = "\n".join(f"{key}: {val}" for key, val in sorted(body.items()))
    _emit(args, formats.report("verify", g, k, report=body), text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(args) -> int:
    g = _load_graph(args)
    ks = [args.k] if args.k is not None else range(1, g.n + 1)
    rows = []
    for k in ks:
        fast = canonical_blocks(find_blocks(g, k)[0])
        slow = canonical_blocks(oracle_blocks(g, k, budget=args.budget))
        rows.append({"k": k, "agree": fast == slow, "blocks": len(fast)})
    ok = all(r["agree"] for r in rows)
    text = "\n".join(f"k={r['k']}: {'agree' if r['agree'] else 'DISAGREE'} ({r['blocks']} blocks)" for r in rows)
    _emit(args, formats.report("oracle-check", g, report={"agree": ok, "per_k": rows}), text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_kappa(args) -> int:
    g = _load_graph(args)
    if args.pair:
        x, y = (_parse_set_one(g, t) for t in args.pair)
        res = kappa_bounded(g, x, y, args.k if args.k is not None else g.n)
        body = {"x": g.labels[x], "y": g.labels[y], "kappa": res.value, "at_least": res.at_least}
        if res.label is not None:
            body["separation"] = formats.separation_json(g, res.label)
        text = f"{'>=' if res.at_least else '='} {res.value}"
        _emit(args, formats.report("kappa", g, args.k, report=body), text)
        return EXIT_OK
    table = preprocess_full(g, workers=args.parallel)
    rows = formats.kappa_table_json(table)
    text = "\n".join(f"{r['x']} {r['y']} {r['kappa']}" for r in rows) or "(no non-adjacent pairs)"
    _emit(args, formats.report("kappa", g, kappa_table=rows), text)
    return EXIT_OK


def _parse_set_one(g: Graph, token: str) -> int:
    try:
        return g.index(token)
    except KeyError:
        raise CliError(f"unknown vertex {token!r}") from None


COMMANDS = {
    "blocks": (cmd_blocks, "all k-blocks and the block-decomposition"),
    "all-blocks": (cmd_all_blocks, "k-blocks for every k"),
    "decide": (cmd_decide, "does a k-block exist (exit 0 yes, 3 no)"),
    "beta": (cmd_beta, "block number"),
    "bw": (cmd_bw, "block-width with a decomposition certificate"),
    "witness": (cmd_witness, "separations certifying that no k-block exists"),
    "tangle": (cmd_tangle, "test whether a k-inseparable set defines a tangle"),
    "tshaped": (cmd_tshaped, "T-shaped separations vs. separating (k+1)-blocks"),
    "gen": (cmd_gen, "write an example graph"),
    "verify": (cmd_verify, "check a decomposition or a saved witness"),
    "oracle-check": (cmd_oracle_check, "compare find_blocks with brute force"),
    "kappa": (cmd_kappa, "pairwise connectivity table"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="graph file (default: stdin)")
    common.add_argument("--input-format", choices=("auto", "edgelist", "dimacs"), default="auto")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("-k", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")

    parser = argparse.ArgumentParser(prog="kblocks", description="Find and certify k-blocks of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "all-blocks":
            p.add_argument("--kappa-table", help="κ-table JSON written by 'kappa --format json'")
        elif name == "tangle":
            p.add_argument("--set", help="vertices of X, comma or space separated (default: all)")
        elif name == "verify":
            p.add_argument("--witness", help="JSON report from 'decide' or 'witness'")
        elif name == "kappa":
            p.add_argument("--pair", nargs=2, metavar=("X", "Y"))
        elif name == "gen":
            p.add_argument("name")
            p.add_argument("params", nargs="*")
            p.add_argument("--as", dest="graph_format", choices=("edgelist", "dimacs"), default="edgelist")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.parallel < 1:
        parser.error("--parallel must be at least 1")
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except (CliError, formats.FormatError, BudgetExceededError, ConstructionError,
            PreconditionError, InvalidPairError, ValueError, KeyError) as err:
        msg = err.args[0] if isinstance(err, KeyError) and err.args else err
        print(f"kblocks {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
