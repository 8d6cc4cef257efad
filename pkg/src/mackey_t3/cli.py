"""Command-line front end.

Labels are written ``lam:mu:nu`` with each diagram a partition string
(``0`` for the empty diagram), e.g. ``2,1:0:3``. Indices are ``m,n,p``.
Every subcommand accepts ``--format text|json|csv``.

Exit codes: 0 success, 1 usage or parse error, 2 arithmetic failure or a
failed invariant in ``check``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import cat3, poset
from .checks import verify_suite
from .lr import lr_coefficient, lr_expand_product, lr_oracle_product
from .partitions import Partition, format_partition, parse_partition
from .sym import SymElement, coproduct, graded_component, iterated_coproduct, pairing


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_sym(text: str) -> SymElement:
    """Parse ``"2*2,1 + 1,1,1"`` style Schur combinations; ``0`` is s of the empty diagram."""
    out = SymElement()
    for term in text.replace(" ", "").split("+"):
        if not term:
            raise UsageError(f"empty term in {text!r}")
        coeff = 1
        if "*" in term:
            head, term = term.split("*", 1)
            try:
                coeff = int(head)
            except ValueError:
                raise UsageError(f"bad coefficient {head!r}") from None
        out = out + SymElement({parse_partition(term): coeff})
    return out


class Output:
    """Collects one result and renders it as text, JSON or CSV."""

    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, headers: list[str], rows: list[list], doc, title: str | None = None):
        if self.fmt == "json":
            self.stream.write(json.dumps(doc, indent=2) + "\n")
        elif self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(headers)
            writer.writerows(rows)
            self.stream.write(buf.getvalue())
        else:
            if title:
                self.stream.write(title + "\n")
            self.stream.write(_text_table(headers, rows))


def _text_table(headers: list[str], rows: list[list]) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for n, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _part(text: str) -> Partition:
    return parse_partition(text)


def _sym_rows(x: SymElement) -> list[list]:
    return [[format_partition(p), c] for p, c in x.items()]


def _layer_rows(k: int, layer: dict) -> list[list]:
    return [[k, str(s), c] for s, c in cat3.sorted_layer(layer)]


# -- subcommands --------------------------------------------------------------


def cmd_lr(args, out: Output) -> int:
    lam, mu, nu = _part(args.lam), _part(args.mu), _part(args.nu)
    c = lr_coefficient(lam, mu, nu)
    doc = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "coeff": c}
    out.emit(
        ["lambda", "mu", "nu", "coeff"],
        [[format_partition(lam), format_partition(mu), format_partition(nu), c]],
        doc,
    )
    return 0


def cmd_product(args, out: Output) -> int:
    lam, mu = _part(args.lam), _part(args.mu)
    if args.oracle is not None:
        x = lr_oracle_product(lam, mu, args.oracle)
    else:
        x = lr_expand_product(lam, mu)
    out.emit(["partition", "coeff"], _sym_rows(x), x.to_json())
    return 0


def cmd_coproduct(args, out: Output) -> int:
    lam = _part(args.lam)
    t = coproduct(lam) if args.arity == 2 else iterated_coproduct(lam, args.arity)
    if args.degrees:
        degrees = tuple(int(d) for d in args.degrees.split(","))
        t = graded_component(t, degrees)
    rows = [[" | ".join(format_partition(p) for p in key), c] for key, c in t.items()]
    out.emit(["tensor", "coeff"], rows, t.to_json())
    return 0


def cmd_pairing(args, out: Output) -> int:
    a, b = parse_sym(args.a), parse_sym(args.b)
    v = pairing(a, b)
    out.emit(["a", "b", "pairing"], [[repr(a), repr(b), v]],
             {"a": a.to_json(), "b": b.to_json(), "pairing": v})
    return 0


def cmd_poset(args, out: Output) -> int:
    if args.pairs:
        parse = poset.parse_pair
        if args.action not in ("leq", "defect"):
            raise UsageError("--pairs supports only 'leq' and 'defect'")
    else:
        parse = poset.parse_triple
    i = parse(args.i)
    if args.action in ("leq", "defect"):
        if args.j is None:
            raise UsageError(f"poset {args.action} needs --j")
        j = parse(args.j)
        if args.action == "leq":
            v = (poset.leq2 if args.pairs else poset.leq3)(i, j)
            out.emit(["i", "j", "leq"], [[str(i), str(j), str(v).lower()]],
                     {"i": list(i), "j": list(j), "leq": v})
        else:
            d = (poset.defect2 if args.pairs else poset.defect3)(i, j)
            out.emit(["i", "j", "defect"], [[str(i), str(j), d]],
                     {"i": list(i), "j": list(j), "defect": d})
        return 0
    items = poset.covers3(i) if args.action == "covers" else poset.down_set3(i)
    key = "covers" if args.action == "covers" else "down_set"
    out.emit(["index", key], [[str(i), str(x)] for x in items],
             {"index": list(i), key: [list(x) for x in items]})
    return 0


def cmd_socle(args, out: Output) -> int:
    inj = cat3.InjectiveLabel(_part(args.lam), _part(args.mu), _part(args.nu))
    if args.layer is not None:
        if args.layer < 1:
            raise UsageError("--layer must be at least 1")
        layer = cat3.socle_layer(inj, args.layer)
        out.emit(["layer", "simple", "mult"], _layer_rows(args.layer, layer),
                 {"injective": inj.to_json(), "layer": args.layer,
                  "entries": cat3.layer_to_json(layer)},
                 title=f"usoc^{args.layer} of I[{inj}]")
        return 0
    filt = cat3.socle_filtration(inj)
    rows = [row for k, layer in enumerate(filt.layers, 1) for row in _layer_rows(k, layer)]
    out.emit(["layer", "simple", "mult"], rows, filt.to_json(),
             title=f"socle filtration of I[{inj}], Loewy length {len(filt.layers)}")
    return 0


def cmd_ext(args, out: Output) -> int:
    src, tgt = cat3.parse_simple(args.source), cat3.parse_simple(args.target)
    if args.q is not None:
        if args.q < 0:
            raise UsageError("--q must be nonnegative")
        qs = [args.q]
    else:
        qs = list(range(max(src.mu.size, tgt.mu.size) + 2))
    results = []
    for q in qs:
        d = cat3.ext_dim(src, tgt, q)
        if args.check_socle and d != cat3.ext_via_socle(src, tgt, q):
            raise ArithmeticError(f"Ext^{q}({src}, {tgt}): closed formula and socle route disagree")
        results.append({"source": src.to_json(), "target": tgt.to_json(), "q": q, "dim": d})
    rows = [[str(src), str(tgt), r["q"], r["dim"]] for r in results]
    out.emit(["source", "target", "q", "dim"], rows, results[0] if len(results) == 1 else results)
    return 0


def cmd_block(args, out: Output) -> int:
    label = cat3.parse_simple(args.label)
    b = cat3.block_index(label)
    out.emit(["label", "block"], [[str(label), b]], {"label": label.to_json(), "block": b})
    return 0


def cmd_decompose(args, out: Output) -> int:
    i = poset.parse_triple(args.index)
    parts = cat3.decompose_X(i)
    ordered = cat3.sorted_layer(parts)
    out.emit(["injective", "mult"], [[str(k), v] for k, v in ordered],
             {"index": list(i),
              "summands": [{"injective": k.to_json(), "mult": v} for k, v in ordered]})
    return 0


def cmd_hom(args, out: Output) -> int:
    i, j = poset.parse_triple(args.source), poset.parse_triple(args.target)
    d = cat3.hom_dim(i, j)
    out.emit(["from", "to", "dim"], [[str(i), str(j), d]],
             {"from": list(i), "to": list(j), "dim": d})
    return 0


def _pair_layers(fn, mu, nu, layer_arg, extra_first=None):
    args = (mu, nu) if extra_first is None else (extra_first, mu, nu)
    if layer_arg is not None:
        if layer_arg < 1:
            raise UsageError("--layer must be at least 1")
        return [(layer_arg, fn(*args, layer_arg))]
    layers = []
    for k in range(1, mu.size + 2):
        layers.append((k, fn(*args, k)))
    while layers and not layers[-1][1]:
        layers.pop()
    return layers


def cmd_socle2(args, out: Output) -> int:
    mu, nu = _part(args.mu), _part(args.nu)
    layers = _pair_layers(cat3.socle2_layer, mu, nu, args.layer)
    rows = [row for k, layer in layers for row in _layer_rows(k, layer)]
    doc = {"mu": list(mu), "nu": list(nu),
           "layers": [{"k": k, "entries": [{"simple": s.to_json(), "mult": c}
                                           for s, c in cat3.sorted_layer(layer)]}
                      for k, layer in layers]}
    out.emit(["layer", "simple", "mult"], rows, doc)
    return 0


def cmd_restrict(args, out: Output) -> int:
    lam, mu, nu = _part(args.lam), _part(args.mu), _part(args.nu)
    layers = _pair_layers(cat3.restrict_W_socle, mu, nu, args.layer, extra_first=lam)
    rows = [row for k, layer in layers for row in _layer_rows(k, layer)]
    doc = {"lambda": list(lam), "mu": list(mu), "nu": list(nu),
           "layers": [{"k": k, "entries": cat3.layer_to_json(layer)} for k, layer in layers]}
    out.emit(["layer", "simple", "mult"], rows, doc)
    return 0


def cmd_check(args, out: Output) -> int:
    if args.max_boxes < 0:
        raise UsageError("--max-boxes must be nonnegative")
    report = verify_suite(args.max_boxes)
    rows = [[r.name, r.checked, r.failures, "PASS" if r.passed else "FAIL", r.first_failure or ""]
            for r in report.results]
    out.emit(["invariant", "checked", "failures", "status", "first_failure"], rows,
             report.to_json(), title=f"invariant suite, max boxes {args.max_boxes}")
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mackey-t3", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient N^nu_{lambda,mu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)

    p = add("product", cmd_product, "Schur expansion of s_lambda * s_mu")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--oracle", type=int, metavar="NVARS",
                   help="use the monomial oracle in NVARS variables")

    p = add("coproduct", cmd_coproduct, "(iterated) coproduct of s_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--degrees", help="keep one graded component, e.g. 1,1")

    p = add("pairing", cmd_pairing, "Hall pairing of two Schur combinations")
    p.add_argument("--a", required=True, help="e.g. '2*2,1 + 1,1,1'")
    p.add_argument("--b", required=True)

    p = add("poset", cmd_poset, "order, defect, cover moves and down-sets of indices")
    p.add_argument("action", choices=["leq", "defect", "covers", "downset"])
    p.add_argument("--i", required=True)
    p.add_argument("--j")
    p.add_argument("--pairs", action="store_true", help="use pairs (m,n) instead of triples")

    p = add("socle", cmd_socle, "socle filtration of I_{lambda,mu,nu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--layer", type=int)

    p = add("ext", cmd_ext, "dim Ext^q between simple objects")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--check-socle", action="store_true",
                   help="also compute through the socle route and fail on mismatch")

    p = add("block", cmd_block, "block index of a label")
    p.add_argument("--label", required=True)

    p = add("decompose", cmd_decompose, "indecomposable summands of X_{m,n,p}")
    p.add_argument("--index", required=True)

    p = add("hom", cmd_hom, "dim Hom(X_from, X_to)")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)

    p = add("socle2", cmd_socle2, "socle layers of the two-diagram injective")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--layer", type=int)

    p = add("restrict", cmd_restrict, "socle layers of (V*/V_*)_lambda (x) W_{mu,nu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--layer", type=int)

    p = add("check", cmd_check, "run the invariant suite")
    p.add_argument("--max-boxes", type=int, default=3)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except (ArithmeticError, AssertionError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (UsageError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
