"""Command line interface.

Exit codes: 0 success, 1 counterexample found, 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify_lattice
from .core import configure
from .corpus import load_corpus, packaged_corpus, parse_group_file
from .errors import ConstructionError, InputError, ResourceCapError
from .formations import parse_formation
from .lattice import subgroup_lattice
from .verify import check_corollary1, check_statement1, check_statement2, run_corpus, verify_corollary, verify_theorem

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

DEFAULT_CORPORA = ("soluble_le_24", "family_le_200")


def _corpus_specs(args) -> list:
    if args.corpus:
        specs = []
        for path in args.corpus:
            specs.extend(load_corpus(path))
    else:
        specs = [s for name in DEFAULT_CORPORA for s in packaged_corpus(name)]
    if args.order_max is not None:
        specs = [s for s in specs if s.expected_order is None or s.expected_order <= args.order_max]
    return specs


def _entries(specs, order_max):
    """Lazy corpus entries; build failures surface as per-entry errors in the sweep."""
    out = []
    for s in specs:
        def build(s=s):
            G = s.build()
            if order_max is not None and G.order > order_max:
                raise InputError(f"{s.name}: order {G.order} above --order-max")
            return G
        build.name = s.name
        out.append(build)
    return out


def _emit(args, doc: dict, table_lines: list):
    if args.format == "table":
        text = "\n".join(table_lines) + "\n"
    else:
        text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows: list, headers: list) -> list:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    lines = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))] + [fmt.format(*r) for r in cells]
    return [l.rstrip() for l in lines]


# --------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    F = parse_formation(args.formation)
    G = parse_group_file(args.file)
    lat = subgroup_lattice(G)
    rows, docs = [], []
    for cls, c in zip(lat.classes, classify_lattice(F, G)):
        d = c.as_dict()
        d["class_size"] = cls.class_size
        docs.append(d)
        rows.append([d["order"], cls.class_size, " ".join(d["generators"]) or "()",
                     "yes" if d["f_subnormal"] else "no", "yes" if d["f_abnormal"] else "no",
                     "yes" if d["self_normalizing"] else "no"])
    doc = {"group": G.name, "order": G.order, "formation": F.name, "classes": docs}
    lines = [f"{G.name}: order {G.order}, formation {F.name}"]
    lines += _table(rows, ["order", "class", "generators", f"{F.name}-subnormal",
                           f"{F.name}-abnormal", "self-normalizing"])
    _emit(args, doc, lines)
    return EXIT_OK


def _sweep(args, mode: str) -> int:
    F = parse_formation(args.formation)
    specs = _corpus_specs(args)
    start = time.perf_counter()
    report = run_corpus(_entries(specs, args.order_max), F, mode, jobs=args.jobs)
    doc = report.as_dict()
    doc["seconds"] = round(time.perf_counter() - start, 2)
    rows = []
    for r in report.reports:
        vec = r.statements.as_tuple() if r.statements is not None else ""
        bad = [l.name for l in r.lemmas if l.status == "VIOLATED"]
        rows.append([r.group, r.order, r.status, vec if mode != "lemmas" else ",".join(bad)])
    lines = _table(rows, ["group", "order", "status", "statements" if mode != "lemmas" else "violated"])
    lines.append(f"counts: {report.counts}; errors: {len(report.errors)}")
    for e in report.errors:
        lines.append(f"error: {e['entry']}: {e['error']}")
    _emit(args, doc, lines)
    return report.exit_code


def cmd_example(args) -> int:
    from .example864 import build_example_864, example_864_facts, proper_subgroups_of_sylow2_report
    from .formations import METANILPOTENT
    from .classify import is_f_abnormal, is_f_subnormal
    from .core import sylow_subgroup

    G, passing = build_example_864(return_candidates=True)
    F = METANILPOTENT
    p2 = sylow_subgroup(G, 2)
    sub2 = proper_subgroups_of_sylow2_report(G)
    s1, _ = check_statement1(F, G)
    s2, w2 = check_statement2(F, G)
    c1, wc1 = check_corollary1(F, G)
    claims = {
        "sylow2_not_NA_subnormal": not is_f_subnormal(F, G, p2)[0],
        "sylow2_not_NA_abnormal": not is_f_abnormal(F, G, p2),
        "proper_subgroups_of_sylow2_NA_subnormal": sub2["not_subnormal"] == 0,
        "statement1_holds": s1,
        "statement2_holds": s2,
        "corollary1_fails": not c1,
    }
    doc = {
        "group": G.name, "order": G.order, "degree": G.degree,
        "generators": [str(g) for g in G.generators],
        "passing_candidates": [c.label for c in passing],
        "facts": example_864_facts(G),
        "claims": claims,
        "sylow2_subgroups": sub2,
        "statement2_witness": w2,
        "corollary1_witness": wc1,
        "theorem": verify_theorem(F, G).as_dict(),
        "corollary": verify_corollary(F, G).as_dict(),
    }
    lines = [f"{G.name}: order {G.order} on {G.degree} points",
             "generators: " + " ".join(doc["generators"]),
             f"candidate actions satisfying every fact: {len(passing)} (pinned: {passing[0].label})"]
    lines += _table([[k, v["observed"], v["expected"], "ok" if v["ok"] else "FAIL"]
                     for k, v in doc["facts"].items()], ["fact", "observed", "expected", ""])
    lines += _table([[k, "ok" if v else "FAIL"] for k, v in claims.items()], ["claim", ""])
    lines.append(f"proper subgroups of the Sylow 2-subgroup not NA-subnormal: "
                 f"{sub2['not_subnormal']} of {sub2['proper_subgroups']}")
    _emit(args, doc, lines)
    if not all(v["ok"] for v in doc["facts"].values()):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK if all(claims.values()) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fsnlab", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sifting")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="classify every subgroup class of a group")
    p.add_argument("file")
    p.add_argument("--formation", default="N")
    p.set_defaults(func=cmd_analyze)

    for name, mode in (("verify-theorem", "theorem"), ("verify-corollary", "corollary"),
                       ("verify-lemmas", "lemmas")):
        p = sub.add_parser(name, parents=[common], help=f"{mode} sweep over a corpus")
        p.add_argument("--formation", default="N")
        p.add_argument("--order-max", type=int, default=None)
        p.add_argument("--corpus", action="append",
                       help="corpus directory or JSON list (repeatable; default: packaged corpora)")
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(func=lambda a, mode=mode: _sweep(a, mode))

    p = sub.add_parser("example-864", parents=[common], help="build the order-864 example and check it")
    p.set_defaults(func=cmd_example)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    configure(seed=args.seed)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"fsnlab: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ConstructionError) as exc:
        print(f"fsnlab: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
