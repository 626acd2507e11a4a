"""Command-line interface.

Exit codes: 0 when every check holds, 1 when a violation was found, 2 on a
usage or configuration error.  Reports go to standard output as JSON with a
stable field order.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Any, Sequence

from . import __version__
from .convex import ConvexityError, check_levi_split, is_convex, word_to_order
from .feasibility import (
    Outcome,
    PairInstance,
    check_lemma_trace,
    conjecture_scan,
    decide_lemma,
    radical_pairs,
    radical_positions,
    run_oracle_all,
)
from .posets import (
    BoxEmbedding,
    ParabolicError,
    RadicalPoset,
    box_embedding,
    canonical_order,
    cominuscule_nodes,
    radical_poset,
    split_roots,
)
from .roots import DynkinType, build_root_system, is_reduced

SCHEMA_VERSION = 1
_INT_LIST = re.compile(r"\[\s*((?:-?\d+,\s*)*-?\d+)\s*\]")
COUNTEREXAMPLE = {"type": "C3", "node": 3, "word": (3, 2, 3, 2, 1, 2, 3, 2, 1), "pair": (4, 2)}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _dump(doc: Any) -> str:
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    # keep integer vectors on one line
    return _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)


def _root_label(x: Sequence[int]) -> str:
    return "(" + ",".join(map(str, x)) + ")"


def render_poset(poset: RadicalPoset, emb: BoxEmbedding | None = None, fmt: str = "dot") -> str:
    """DOT, ASCII or JSON rendering of a radical poset with its grid coordinates."""
    elems = list(emb.ordered()) if emb is not None else sorted(poset.elements, key=lambda b: (sum(b), b))
    ids = {x: f"n{k + 1}" for k, x in enumerate(elems)}
    if fmt == "json":
        nodes = []
        for x in elems:
            node: dict[str, Any] = {"id": ids[x], "root": list(x)}
            if emb is not None:
                node["coords"] = list(emb.coords[x])
            nodes.append(node)
        edges = [{"source": ids[lo], "target": ids[hi], "label": f"α{lab}"} for lo, hi, lab in poset.covers]
        doc: dict[str, Any] = {"nodes": nodes, "edges": edges}
        if emb is not None:
            doc["a_labels"] = list(emb.a_labels)
            doc["d_labels"] = list(emb.d_labels)
        return _dump(doc) + "\n"
    if fmt == "dot":
        out = ["digraph radical_poset {", "  rankdir=BT;"]
        for x in elems:
            out.append(f'  {ids[x]} [label="{_root_label(x)}"];')
        for lo, hi, lab in poset.covers:
            out.append(f'  {ids[lo]} -> {ids[hi]} [label="α{lab}"];')
        if emb is not None:
            for i in range(1, emb.A + 1):
                row = [ids[emb.at(i, j)] for j in range(emb.F[i - 1], emb.L[i - 1] + 1)]
                out.append("  { rank=same; " + "; ".join(row) + "; }" if len(row) > 1 else f"  // diagonal {i}: {row[0]}")
        out.append("}")
        return "\n".join(out) + "\n"
    if fmt == "ascii":
        if emb is None:
            return "\n".join(_root_label(x) for x in elems) + "\n"
        width = max(len(_root_label(x)) for x in elems) + 1
        lines = []
        for i in range(1, emb.A + 1):
            cells = [" " * width] * (emb.F[i - 1] - 1)
            cells += [_root_label(emb.at(i, j)).ljust(width) for j in range(emb.F[i - 1], emb.L[i - 1] + 1)]
            lines.append("".join(cells).rstrip())
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def emit_report(report: dict[str, Any]) -> str:
    """Serialize with the envelope fields first."""
    head = {"schema_version": SCHEMA_VERSION, "tool": "cominuscule", "tool_version": __version__}
    head.update(report)
    return _dump(head)


def witness_map(v) -> dict[str, Any]:
    """Both sides of a violation as coefficient maps keyed by root tuples."""
    lhs = {_root_label(v.xi_i): 1, _root_label(v.xi_j): -1}
    rhs: dict[str, int] = {}
    for w in v.witness:
        key = _root_label(w.root)
        rhs[key] = rhs.get(key, 0) + (w.coeff if w.side == "after" else -w.coeff)
    return {"lhs": lhs, "rhs": rhs}


def witness_identity(v, order: Sequence[Sequence[int]], p) -> str:
    """Human form using the radical enumeration in the order, e.g. 'ξ4 - ξ2 = ξ5 - ξ1'."""
    rad = [tuple(b) for b in order if p.is_radical(b)]
    name = {b: f"ξ{k + 1}" for k, b in enumerate(rad)}
    for k, b in enumerate(order):
        name.setdefault(tuple(b), f"β{k + 1}")

    def term(c, root, first):
        sym = name[tuple(root)]
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        if first:
            return ("-" if c < 0 else "") + mag + sym
        return (" - " if c < 0 else " + ") + mag + sym

    lhs = term(1, v.xi_i, True) + term(-1, v.xi_j, False)
    parts = sorted(v.witness, key=lambda w: (w.side != "after", w.position))
    rhs = ""
    for n, w in enumerate(parts):
        rhs += term(w.coeff if w.side == "after" else -w.coeff, w.root, n == 0)
    return f"{lhs} = {rhs}"


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _type_of(args) -> DynkinType:
    if not args.type:
        raise UsageError("--type is required")
    try:
        return DynkinType.parse(args.type, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parabolic(args):
    rs = build_root_system(_type_of(args))
    nodes = sorted(cominuscule_nodes(rs))
    node = args.node
    if node is None:
        if len(nodes) != 1:
            raise UsageError(f"{rs.type} has cominuscule nodes {nodes}; choose one with --node")
        node = nodes[0]
    try:
        return split_roots(rs, node)
    except ParabolicError as exc:
        raise UsageError(str(exc)) from None


def _parse_word(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(c) for c in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}") from None


def _order_for(args, p):
    """(order, word, embedding-or-None) from --word or the canonical choice."""
    rs = p.root_system
    word = _parse_word(getattr(args, "word", None))
    if word is not None:
        if len(word) != len(rs.positive_roots) or not is_reduced(rs, word):
            raise UsageError(f"word {' '.join(map(str, word))} is not a reduced word for the longest element")
        return word_to_order(rs, word), word, None
    from .convex import order_to_word

    emb = box_embedding(radical_poset(p))
    order = canonical_order(emb)
    return order, order_to_word(rs, order), emb


def _config(args) -> dict[str, Any]:
    skip = {"func", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args) -> tuple[int, dict]:
    rs = build_root_system(_type_of(args))
    return 0, {"type": str(rs.type), "cominuscule_nodes": sorted(cominuscule_nodes(rs)),
               "highest_root": list(rs.highest_root)}


def cmd_poset(args) -> tuple[int, str]:
    p = _parabolic(args)
    poset = radical_poset(p)
    emb = None if args.no_embedding else box_embedding(poset)
    return 0, render_poset(poset, emb, args.format)


def cmd_order(args) -> tuple[int, dict]:
    p = _parabolic(args)
    order, word, emb = _order_for(args, p)
    rs = p.root_system
    res = {
        "parabolic": p.label,
        "word": list(word),
        "order": [list(b) for b in order],
        "radical_positions": radical_positions(p, order),
        "split": check_levi_split(order, p).value,
        "convex": is_convex(rs, order),
    }
    if emb is not None:
        res["a_labels"] = list(emb.a_labels)
        res["d_labels"] = list(emb.d_labels)
    return 0, res


def _feasibility(p, order, emb, method: str, cap: int, box: int | None, workers: int) -> dict:
    insts = [PairInstance.create(p, order, i, j, emb, check=False) for i, j in radical_pairs(p, order)]
    if method == "lemma":
        verdicts = [decide_lemma(x) for x in insts]
        for x, v in zip(insts, verdicts):
            if v.outcome is Outcome.POSITIVE:
                bad = check_lemma_trace(x, v)
                if bad:
                    raise RuntimeError(f"lemma trace failed re-validation: {bad}")
    else:
        verdicts = run_oracle_all(insts, cap, box, workers)
    items = []
    violations = 0
    for x, v in zip(insts, verdicts):
        item = {"i": x.i_pos, "j": x.j_pos, **v.to_dict()}
        if v.outcome is Outcome.VIOLATION:
            violations += 1
            item["witness_map"] = witness_map(v)
            item["identity"] = witness_identity(v, order, p)
        items.append(item)
    counts = {o.value: sum(v.outcome is o for v in verdicts) for o in Outcome}
    return {"pairs": len(insts), "violations": violations, "outcomes": counts, "method": method, "items": items}


def cmd_feasibility(args) -> tuple[int, dict]:
    p = _parabolic(args)
    order, word, emb = _order_for(args, p)
    if args.method == "lemma" and check_levi_split(order, p).value != "radical_first":
        raise UsageError("the lemma method needs a radical-first order; use --method oracle")
    if args.method == "lemma" and emb is None:
        emb = box_embedding(radical_poset(p))
    res = _feasibility(p, order, emb, args.method, args.cap, args.box, args.workers)
    res = {"parabolic": p.label, "word": list(word), **res}
    return (1 if res["violations"] else 0), res


def cmd_verify(args) -> tuple[int, dict]:
    p = _parabolic(args)
    order, word, emb = _order_for(args, p)
    if args.method != "symbolic":
        args.command = "feasibility"
        return cmd_feasibility(args)
    from .uq import RootVectorCache, verify_theorem
    from .uq import braid

    if args.cache_dir:
        braid._DEFAULT_CACHE = RootVectorCache(args.cache_dir)
    rep = verify_theorem(p, word, args.version)
    res = rep.to_dict()
    res["symmetric"] = rep.symmetric()
    return (0 if rep.all_in_levi else 1), res


def cmd_counterexample(args) -> tuple[int, dict]:
    from .roots import build_root_system as brs

    p = split_roots(brs(COUNTEREXAMPLE["type"]), COUNTEREXAMPLE["node"])
    word = COUNTEREXAMPLE["word"]
    order = word_to_order(p.root_system, word)
    pos = radical_positions(p, order)
    a, b = COUNTEREXAMPLE["pair"]
    inst = PairInstance.create(p, order, pos[a - 1], pos[b - 1])
    v = run_oracle_all([inst], args.cap)[0]
    res: dict[str, Any] = {
        "parabolic": p.label,
        "word": list(word),
        "order": [list(x) for x in order],
        "split": check_levi_split(order, p).value,
        "pair": {"i": inst.i_pos, "j": inst.j_pos, "xi_i": list(inst.xi_i), "xi_j": list(inst.xi_j)},
        "verdict": v.to_dict(),
    }
    if v.outcome is Outcome.VIOLATION:
        res["violation"] = {**witness_map(v), "identity": witness_identity(v, order, p)}
    if args.symbolic:
        from .uq import UqAlgebra, in_levi
        from .uq.braid import commutator_for

        alg = UqAlgebra.of(p.root_system)
        res["commutator_in_levi"] = in_levi(commutator_for(alg, word, inst.i_pos, inst.j_pos), p.S)
    return (1 if v.outcome is Outcome.VIOLATION else 0), res


def cmd_conjecture(args) -> tuple[int, dict]:
    p = _parabolic(args)
    rep = conjecture_scan(p, args.budget, args.cap, args.workers)
    return (1 if rep.violations else 0), rep.to_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cominuscule", description="Radical-root posets, convex orders and Levi membership checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def selectors(sp, node=True):
        sp.add_argument("--type", required=True, help="Dynkin type, e.g. C3, or a family letter with --rank")
        sp.add_argument("--rank", type=int)
        if node:
            sp.add_argument("--node", type=int, help="cominuscule node t")

    def ordering(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--canonical", action="store_true", help="use the canonical order (default)")
        g.add_argument("--word", help="explicit reduced word, e.g. '3 2 3 2 1 2 3 2 1'")

    def caps(sp):
        sp.add_argument("--cap", type=int, default=4, help="coefficient cap for the oracle")
        sp.add_argument("--box", type=int, default=None, help="optional bound on residual coordinates")
        sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("classify", help="cominuscule nodes of a Dynkin type")
    selectors(sp, node=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("poset", help="render the radical poset")
    selectors(sp)
    sp.add_argument("--format", choices=("dot", "ascii", "json"), default="dot")
    sp.add_argument("--no-embedding", action="store_true", help="omit grid coordinates")
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("order", help="convex order and reduced word")
    selectors(sp)
    ordering(sp)
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("feasibility", help="coefficient-vanishing problem on all radical pairs")
    selectors(sp)
    ordering(sp)
    sp.add_argument("--method", choices=("lemma", "oracle"), default="lemma")
    caps(sp)
    sp.set_defaults(func=cmd_feasibility)

    sp = sub.add_parser("verify", help="Levi membership of all radical commutators")
    selectors(sp)
    ordering(sp)
    sp.add_argument("--method", choices=("symbolic", "lemma", "oracle"), default="symbolic")
    sp.add_argument("--version", dest="version", choices=("fwd", "inv"), default="fwd",
                    help="braid automorphism used for root vectors")
    sp.add_argument("--cache-dir", help="persist root vectors here")
    caps(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("counterexample", help="reproduce the C3 order with a surviving radical term")
    sp.add_argument("--cap", type=int, default=4)
    sp.add_argument("--symbolic", action="store_true", help="also compute the commutator")
    sp.set_defaults(func=cmd_counterexample)

    sp = sub.add_parser("conjecture", help="oracle scan over all split convex orders")
    selectors(sp)
    sp.add_argument("--budget", type=int, default=None, help="maximum number of radical-first orders")
    caps(sp)
    sp.set_defaults(func=cmd_conjecture)
    return parser


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else 2
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        code, result = args.func(args)
    except (UsageError, ConvexityError) as exc:
        print(f"cominuscule: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        out.write(result)
        return code
    report = {"command": args.command, "config": _config(args), "result": result}
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    out.write(emit_report(report) + "\n")
    return code


def main() -> None:
    raise SystemExit(run_command())


if __name__ == "__main__":
    main()
