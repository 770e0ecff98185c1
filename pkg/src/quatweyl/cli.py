"""Command-line driver.

Exit codes: 0 all matched, 1 a mismatch, 2 usage or input error,
3 a closure or orbit cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import claims as CL
from . import code as C
from . import dualquat as D
from . import groups as G
from . import lattice as L
from . import linalg
from . import octonion as O
from . import quat as QT
from .exact import parse_rational

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, text: str, payload) -> None:
    if args.json is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    data = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.json == "-":
        sys.stdout.write(data)
    else:
        with open(args.json, "w") as fh:
            fh.write(data)


# --- verify ----------------------------------------------------------------------------

def corrupt_builtin(name: str) -> None:
    """Perturb one entry of a builtin lattice basis (negative control)."""
    rows = [list(r) for r in L.builtin_lattices()[name].rows]
    rows[-1][-1] += Fraction(1, 4)
    L.override_builtin(name, rows)


def cmd_verify(args) -> int:
    L.clear_overrides()
    for name in args.corrupt or ():
        corrupt_builtin(name)
    try:
        report = CL.verify(args.filter)
    finally:
        L.clear_overrides()
    if not report.results:
        print(f"no claim matches {args.filter!r}", file=sys.stderr)
        return EXIT_USAGE
    for r in sorted(report.results, key=lambda r: r.id):
        t = f" [{r.seconds:.2f}s]" if args.timings else ""
        print(f"{r.status:29s} {r.id}{t}")
        print(f"    expected: {r.expected}")
        print(f"    computed: {r.computed}")
    s = report.summary
    print(f"match {s['match']}, mismatch {s['mismatch']}, reported {s['reported']}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.dumps())
    return EXIT_OK if report.ok else EXIT_MISMATCH


# --- lattice ---------------------------------------------------------------------------

def cmd_lattice(args) -> int:
    m = L.load_lattice(args.lattice)
    op = args.op
    if op == "gram":
        g = L.gram(m).entries
        _emit(args, linalg.format_matrix(g), linalg.matrix_to_json(g))
    elif op == "hnf":
        h = L.hnf(m).rows
        _emit(args, linalg.format_matrix(h), linalg.matrix_to_json(h))
    elif op == "det":
        d = L.det_lattice(m)
        _emit(args, str(d), {"det": str(d), "abs": str(abs(d))})
    elif op == "theta":
        th = L.theta_prefix(m, args.max_norm, cap=args.cap)
        lines = [f"{n}\t{c}" for n, c in th.pairs()]
        if args.exponent_scale is not None:
            lines = [f"{n}\t{n * args.exponent_scale}\t{c}" for n, c in th.pairs()]
        _emit(args, "\n".join(lines), th.to_json(args.exponent_scale))
    elif op == "shells":
        shells = L.shortest_vectors(m, args.norm, cap=args.cap)
        vecs = shells.get(args.norm, [])
        payload = L.shell_to_json(args.norm, vecs, args.merge or (), args.scale)
        text = [f"norm {args.norm}: {len(vecs)} vectors"]
        text += [f"  {t['count']:8d}  {t['signature']}" for t in payload["types"]]
        _emit(args, "\n".join(text), payload)
    elif op == "contains":
        other = L.load_lattice(args.other)
        fwd, back = L.contains(m, other), L.contains(other, m)
        ratio = L.det_lattice(other) / L.det_lattice(m)
        _emit(args, f"{args.lattice} contains {args.other}: {fwd}\n"
                    f"{args.other} contains {args.lattice}: {back}\n"
                    f"|det| ratio: {abs(ratio)}",
              {"contains": fwd, "contained_in": back, "det_ratio": str(abs(ratio))})
    return EXIT_OK


# --- group -----------------------------------------------------------------------------

PUBLISHED_ORDERS = {"wf4": 1152, "gc": 322560, "a8": 20160, "c": 192, "cprime": 32,
                    "observation": CL.OBSERVATION_ORDER, "2a4": 24, "2a5": 120, "b2": 8}


def _builtin_group(name: str):
    """Returns (kind, generators, names, label base)."""
    if name == "wf4":
        return "matrix", [D.dq_to_matrix4(g) for g in D.wf4_generators().as_list()], \
            ["e1", "e2", "e3", "e4"], 0
    if name == "gc":
        return "perm", G.gc_group().generators, ["g1", "g2"], 0
    if name == "a8":
        return "perm", G.a8_subgroup().generators, ["t1", "t2"], 0
    if name == "c":
        return "perm", G.PermGroup.from_cycles(G.C_GENERATORS, 16, 1).generators, None, 1
    if name == "cprime":
        gens = [G.parse_cycles(G.TAU_IMAGES[x], 16, 1) for x in "ijpq"]
        return "perm", gens, ["i", "j", "p", "q"], 1
    if name == "observation":
        return "matrix", O.observation_generators(), ["z1", "z2", "z3", "eta", "x1", "x2"], 0
    if name == "2a4":
        return "matrix", [QT.rho4(u) for u in (QT.I, QT.J, QT.K, QT.OMEGA_MINUS)], \
            ["i", "j", "k", "w"], 0
    if name == "b2":
        return "matrix", [G.B2_I, G.B2_J], ["I", "J"], 0
    if name == "2a5":
        # right-regular action on the 120 icosians
        els = QT.icosian_group()
        index = {g.key(): n for n, g in enumerate(els)}
        gens = [tuple(index[QT.quat_mul(h, g).key()] for h in els) for g in QT.icosian_generators()]
        return "perm", gens, ["i", "j", "k", "w", "x"], 0
    raise KeyError(name)


def _blocks(text: str) -> list[str]:
    out, cur = [], []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        if body.strip() in ("", "---"):
            if cur:
                out.append("\n".join(cur))
                cur = []
            continue
        cur.append(body)
    if cur:
        out.append("\n".join(cur))
    return out


def load_group(source: str):
    """A builtin name, or a file of cycle-notation lines or blank-line-separated matrices."""
    try:
        return _builtin_group(source)
    except KeyError:
        pass
    with open(source) as fh:
        text = fh.read()
    blocks = _blocks(text)
    if not blocks:
        raise ValueError(f"{source}: no generators")
    if "(" in text:
        lines = [ln for b in blocks for ln in b.splitlines() if ln.strip()]
        labels = [int(t) for ln in lines for t in
                  ln.replace("(", " ").replace(")", " ").replace(",", " ").split()]
        base = 0 if 0 in labels else 1
        degree = max(labels) + 1 - base
        return "perm", [G.parse_cycles(ln, degree, base) for ln in lines], None, base
    return "matrix", [linalg.parse_matrix(b) for b in blocks], None, 0


def _perm_group(kind, gens, cap):
    if kind == "perm":
        return G.PermGroup(len(gens[0]), gens)
    dim = len(gens[0])
    return G.matrix_action_to_perm(gens, O.standard_basis(dim), cap=cap).group


def cmd_group(args) -> int:
    kind, gens, names, base = load_group(args.group)
    op = args.op
    published = PUBLISHED_ORDERS.get(args.group)
    if op == "order":
        order = _perm_group(kind, gens, args.cap).order()
        text = str(order) if published is None else f"{order}\t(published {published})"
        payload = {"order": order}
        if published is not None:
            payload.update(published=published,
                           status=CL.MATCH if order == published else CL.REPORTED)
        _emit(args, text, payload)
    elif op == "center":
        if kind == "perm":
            els = G.closure(gens, mul=G.perm_mul, cap=args.cap,
                            identity=G.perm_identity(len(gens[0])))
            z = G.center(els, gens, mul=G.perm_mul)
            shown = [G.format_cycles(g, base) for g in z]
        else:
            els = G.closure(gens, cap=args.cap, identity=linalg.identity(len(gens[0])))
            z = G.center(els, gens)
            shown = [linalg.format_matrix(g).rstrip() for g in z]
        _emit(args, f"center of order {len(z)}\n" + "\n\n".join(shown),
              {"order": len(z), "elements": shown if kind == "perm"
               else [linalg.matrix_to_json(g) for g in z]})
    elif op == "coxeter":
        if kind == "perm":
            n = len(gens)
            table = [[G.perm_order(gens[i] if i == j else G.perm_mul(gens[i], gens[j]))
                      for j in range(n)] for i in range(n)]
            rep = G.CoxeterReport(table)
        else:
            rep = G.coxeter_matrix(gens, cap=args.cap)
        _emit(args, rep.format(), {"coxeter_matrix": rep.pairwise_order})
    elif op == "relations":
        with open(args.file) as fh:
            rels = [ln.split("#", 1)[0].strip() for ln in fh]
        rels = [r for r in rels if r]
        names = args.names.split(",") if args.names else names
        if kind == "perm":
            degree = len(gens[0])
            res = G.check_relations(gens, rels, names, mul=G.perm_mul, inv=G.perm_inv,
                                    identity=G.perm_identity(degree),
                                    is_identity=G.is_perm_identity)
        else:
            res = G.check_relations(gens, rels, names)
        _emit(args, "\n".join(f"{'holds' if ok else 'FAILS'}\t{r}" for r, ok in zip(rels, res)),
              {"relations": [{"word": r, "holds": ok} for r, ok in zip(rels, res)]})
        return EXIT_OK if all(res) else EXIT_MISMATCH
    return EXIT_OK


# --- code ------------------------------------------------------------------------------

def cmd_code(args) -> int:
    c16 = C.c16()
    if args.op == "weights":
        wd = C.weight_distribution(c16)
        _emit(args, "\n".join(f"{w}\t{c}" for w, c in wd.as_dict().items()), wd.to_json())
    elif args.op == "words":
        ws = [C.bitstring(w) for w in C.words_of_weight(c16, args.weight)]
        _emit(args, "\n".join(ws), {"weight": args.weight, "count": len(ws), "words": ws})
    elif args.op == "image":
        img = C.image_of_lattice()
        wd = C.weight_distribution(img)
        rows = [C.bitstring(r) for r in img.generator_rows]
        _emit(args, f"dimension {img.dimension}, {len(img)} words, equal to C16: {img == c16}\n"
                    + "\n".join(rows),
              {"dimension": img.dimension, "size": len(img), "rows": rows,
               "weights": wd.to_json(), "equals_c16": img == c16})
    elif args.op == "invariance":
        with open(args.permfile) as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
        lines = [ln for ln in lines if ln]
        perms = [G.parse_cycles(ln, C.LENGTH, args.base) for ln in lines]
        res = [C.invariance_under(c16, [p]) for p in perms]
        _emit(args, "\n".join(f"{'invariant' if ok else 'not invariant'}\t{ln}"
                              for ln, ok in zip(lines, res)),
              {"permutations": [{"cycles": ln, "invariant": ok} for ln, ok in zip(lines, res)]})
    return EXIT_OK


# --- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quatweyl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="recompute every claim and compare")
    v.add_argument("--filter", help="claim-id glob, e.g. 'lambda.*'")
    v.add_argument("--json", metavar="PATH", help="write the report as JSON")
    v.add_argument("--timings", action="store_true", help="print per-claim wall time")
    v.add_argument("--corrupt", action="append", metavar="LATTICE", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    def common(sp):
        sp.add_argument("--json", nargs="?", const="-", metavar="PATH",
                        help="JSON output (stdout when PATH is omitted)")
        sp.add_argument("--cap", type=int, default=10**7, help="enumeration/closure size cap")

    la = sub.add_parser("lattice", help="lattice queries on a builtin name or matrix file")
    la.add_argument("lattice")
    lops = la.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("gram", "hnf", "det"):
        common(lops.add_parser(name))
    t = lops.add_parser("theta")
    t.add_argument("--max-norm", type=_rational, required=True)
    t.add_argument("--exponent-scale", type=_rational, help="also print norm * scale")
    common(t)
    s = lops.add_parser("shells")
    s.add_argument("--norm", type=_rational, required=True)
    s.add_argument("--merge", type=_rational, action="append",
                   help="pool the signs of this absolute value (repeatable)")
    s.add_argument("--scale", type=_rational, default=Fraction(4))
    common(s)
    c = lops.add_parser("contains")
    c.add_argument("other")
    common(c)
    la.set_defaults(func=cmd_lattice)

    g = sub.add_parser("group", help="group queries: " + ", ".join(PUBLISHED_ORDERS) + " or a file")
    g.add_argument("group")
    gops = g.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("order", "center", "coxeter"):
        common(gops.add_parser(name))
    r = gops.add_parser("relations")
    r.add_argument("file")
    r.add_argument("--names", help="comma-separated generator names")
    common(r)
    g.set_defaults(func=cmd_group)

    co = sub.add_parser("code", help="queries on the length-16 code")
    cops = co.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("weights", "image"):
        common(cops.add_parser(name))
    w = cops.add_parser("words")
    w.add_argument("--weight", type=int, required=True)
    common(w)
    inv = cops.add_parser("invariance")
    inv.add_argument("permfile")
    inv.add_argument("--base", type=int, choices=(0, 1), default=None)
    common(inv)
    co.set_defaults(func=cmd_code)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (G.ClosureCapExceeded, G.OrbitCapExceeded, L.VectorCapExceeded) as exc:
        print(f"cap exceeded: {exc.args[0] if exc.args else ''}", file=sys.stderr)
        return EXIT_CAP
    except (linalg.MatrixFormatError, L.LatticeError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
