"""Command line front end.

Line-oriented ``key: value`` output, or one JSON object with ``--json``.
Exit codes: 0 for success or an affirmative verdict, 1 for a negative
verdict or a failing suite, 2 for usage, parse, or cap violations.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import DiagrammaError
from . import combination as cb
from . import diagrams as dg
from . import diagram_products as dp
from . import graph_products as gp
from . import pvt
from . import suites as suite_mod
from .graphs import find_induced_odd_cycle_ge5, load_graph, realize_as_disjointness, subset_tag

MAX_WORD_TOKENS = 10 ** 5
MAX_TRANSISTORS = 10 ** 5
MAX_EXPONENT = 10 ** 4


class CapError(DiagrammaError):
    pass


def _check_word_size(text):
    if len(text.split()) > MAX_WORD_TOKENS:
        raise CapError("word exceeds %d tokens" % MAX_WORD_TOKENS)
    return text


def _check_diagram_size(D):
    if len(D.transistors) > MAX_TRANSISTORS:
        raise CapError("diagram exceeds %d transistors" % MAX_TRANSISTORS)
    return D


def _check_exponents(syllables):
    for _, e in syllables:
        if isinstance(e, int) and abs(e) > MAX_EXPONENT:
            raise CapError("exponent %d exceeds %d" % (e, MAX_EXPONENT))
    return syllables


def _emit(args, data, lines):
    if getattr(args, "json", False):
        print(json.dumps(data))
    else:
        for line in lines:
            print(line)


def _load_any_diagram(path):
    """Load a diagram file, labeled or not, by sniffing for a groups line."""
    with open(path) as fh:
        text = fh.read()
    labeled = any(ln.strip().startswith("groups:") or " | " in ln
                  for ln in text.splitlines())
    if labeled:
        return dp.load_labeled_diagram(path), True
    return dg.load_diagram(path), False


# -- subcommands -------------------------------------------------------------------

def cmd_reduce(args):
    obj, labeled = _load_any_diagram(args.file)
    D = obj.diagram if labeled else obj
    _check_diagram_size(D)
    before = len(D.transistors)
    red = dp.reduce_labeled(obj) if labeled else dg.reduce(obj)
    after = len((red.diagram if labeled else red).transistors)
    removed = (before - after) // 2
    if args.out:
        if labeled:
            dp.save_labeled_diagram(red, args.out)
        else:
            dg.save_diagram(red, args.out)
    _emit(args, {"transistors_before": before, "transistors_after": after,
                 "dipoles_reduced": removed, "out": args.out},
          ["transistors: %d -> %d" % (before, after),
           "dipoles_reduced: %d" % removed])
    return 0


def cmd_eq(args):
    a, la = _load_any_diagram(args.file1)
    b, lb = _load_any_diagram(args.file2)
    if la != lb:
        raise DiagrammaError("cannot compare a labeled and an unlabeled diagram")
    _check_diagram_size(a.diagram if la else a)
    _check_diagram_size(b.diagram if lb else b)
    eq = (dp.equivalent_mod_dipoles_labeled(a, b) if la
          else dg.equivalent_mod_dipoles(a, b))
    _emit(args, {"equal": eq}, ["EQUAL" if eq else "DIFFERENT"])
    return 0 if eq else 1


def cmd_graph_realize(args):
    G = load_graph(args.graph)
    fam, vmap = realize_as_disjointness(G)
    lines = ["ground: %d" % fam.n]
    lines += ["set %d: %s" % (v, subset_tag(s)) for v, s in enumerate(fam.sets)]
    lines.append("vertex_map: %s" % " ".join(str(v) for v in vmap))
    _emit(args, {"ground": fam.n, "sets": [sorted(s) for s in fam.sets],
                 "vertex_map": list(vmap)}, lines)
    return 0


def cmd_graph_odd_cycle(args):
    G = load_graph(args.graph)
    cyc = find_induced_odd_cycle_ge5(G)
    if cyc is None:
        _emit(args, {"witness": None}, ["witness: NONE"])
        return 1
    _emit(args, {"witness": list(cyc)},
          ["witness: %s" % " ".join(str(v) for v in cyc)])
    return 0


def _parse_gp(args, text):
    ctx = gp.gp_context(load_graph(args.graph))
    w = gp.parse_gp_word(ctx, _check_word_size(text))
    _check_exponents(w.syllables)
    return ctx, w


def cmd_gp_nf(args):
    _, w = _parse_gp(args, args.word)
    nf = gp.gp_normal_form(w)
    s = gp.gp_word_str(nf) or "1"
    _emit(args, {"nf": s, "syllables": len(nf.syllables)},
          ["nf: %s" % s, "syllables: %d" % len(nf.syllables)])
    return 0


def cmd_gp_eq(args):
    ctx, w1 = _parse_gp(args, args.word1)
    w2 = gp.parse_gp_word(ctx, _check_word_size(args.word2))
    _check_exponents(w2.syllables)
    eq = gp.gp_equal(w1, w2)
    _emit(args, {"equal": eq}, ["EQUAL" if eq else "DIFFERENT"])
    return 0 if eq else 1


def _raag_image(args):
    G = load_graph(args.graph)
    ctx = gp.gp_context(G)
    w = gp.parse_gp_word(ctx, _check_word_size(args.word))
    _check_exponents(w.syllables)
    emb = cb.raag_embedding(G)
    D = cb.raag_to_diagram_group(G, w.syllables, emb)
    return emb, _check_diagram_size(D)


def cmd_raag_wp(args):
    _, D = _raag_image(args)
    triv = dg.is_trivial(D)
    _emit(args, {"trivial": triv}, ["TRIVIAL" if triv else "NONTRIVIAL"])
    return 0 if triv else 1


def cmd_raag_embed(args):
    emb, D = _raag_image(args)
    dg.save_diagram(D, args.out)
    Q = emb.q_ctx.q
    _emit(args, {"transistors": len(D.transistors),
                 "letters": Q.letter_count, "relations": len(Q.relations),
                 "out": args.out},
          ["transistors: %d" % len(D.transistors),
           "letters: %d" % Q.letter_count,
           "relations: %d" % len(Q.relations),
           "out: %s" % args.out])
    return 0


def _pvt_diagram(args):
    n = args.n
    if args.vt:
        word = pvt.parse_vt_word(_check_word_size(args.word), n)
        return pvt.vt_to_diagram(n, word)
    lword = pvt.parse_lambda_word(_check_word_size(args.word), n)
    return pvt.lambda_to_diagram(n, lword)


def cmd_pvt_wp(args):
    n = args.n
    if args.vt:
        word = pvt.parse_vt_word(_check_word_size(args.word), n)
        triv = pvt.vt_is_trivial(n, word)
    else:
        lword = pvt.parse_lambda_word(_check_word_size(args.word), n)
        triv = pvt.lambda_is_trivial(n, lword)
    _emit(args, {"trivial": triv}, ["TRIVIAL" if triv else "NONTRIVIAL"])
    return 0 if triv else 1


def cmd_pvt_diagram(args):
    D = _check_diagram_size(_pvt_diagram(args))
    dg.save_diagram(D, args.out)
    _emit(args, {"transistors": len(D.transistors), "out": args.out},
          ["transistors: %d" % len(D.transistors), "out: %s" % args.out])
    return 0


def cmd_pvt_relators(args):
    report = pvt.vt_relator_check(args.n)
    bad = [name for name, ok in report if not ok]
    lines = ["%s %s" % ("ok" if ok else "FAIL", name) for name, ok in report]
    lines.append("relators: %d" % len(report))
    lines.append("all_hold: %s" % ("true" if not bad else "false"))
    _emit(args, {"relators": len(report), "failed": bad,
                 "all_hold": not bad}, lines)
    return 0 if not bad else 1


def cmd_suite(args):
    fn = suite_mod.SUITES[args.name]
    result = fn(seed=args.seed) if args.count is None \
        else fn(seed=args.seed, count=args.count)
    _emit(args, dict(result), result.lines())
    return 0 if result.ok else 1


def _build_parser():
    p = argparse.ArgumentParser(prog="diagramma",
                                description="Semigroup diagram calculator.")

    def add_json(sp):
        sp.add_argument("--json", action="store_true",
                        help="emit one JSON object instead of text")

    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("reduce", help="cancel all dipoles in a diagram file")
    sp.add_argument("file")
    sp.add_argument("--out", help="write the reduced diagram here")
    add_json(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("eq", help="compare two diagram files modulo dipoles")
    sp.add_argument("file1")
    sp.add_argument("file2")
    add_json(sp)
    sp.set_defaults(func=cmd_eq)

    g = sub.add_parser("graph", help="disjointness realizations and witnesses")
    gsub = g.add_subparsers(dest="graph_cmd", required=True)
    sp = gsub.add_parser("realize", help="realize a graph by disjoint subsets")
    sp.add_argument("graph")
    add_json(sp)
    sp.set_defaults(func=cmd_graph_realize)
    sp = gsub.add_parser("odd-cycle", help="find an induced odd cycle of length >= 5")
    sp.add_argument("graph")
    add_json(sp)
    sp.set_defaults(func=cmd_graph_odd_cycle)

    g = sub.add_parser("gp", help="graph product words over integer vertex groups")
    gsub = g.add_subparsers(dest="gp_cmd", required=True)
    sp = gsub.add_parser("nf", help="normal form of a word like 'v0^2 v1^-1'")
    sp.add_argument("--graph", required=True)
    sp.add_argument("word")
    add_json(sp)
    sp.set_defaults(func=cmd_gp_nf)
    sp = gsub.add_parser("eq", help="decide equality of two words")
    sp.add_argument("--graph", required=True)
    sp.add_argument("word1")
    sp.add_argument("word2")
    add_json(sp)
    sp.set_defaults(func=cmd_gp_eq)

    g = sub.add_parser("raag", help="right-angled Artin groups as diagram groups")
    gsub = g.add_subparsers(dest="raag_cmd", required=True)
    sp = gsub.add_parser("wp", help="is this word trivial?")
    sp.add_argument("--graph", required=True)
    sp.add_argument("word")
    add_json(sp)
    sp.set_defaults(func=cmd_raag_wp)
    sp = gsub.add_parser("embed", help="write the word's image as a diagram file")
    sp.add_argument("--graph", required=True)
    sp.add_argument("word")
    sp.add_argument("--out", required=True)
    add_json(sp)
    sp.set_defaults(func=cmd_raag_embed)

    g = sub.add_parser("pvt", help="pure virtual twin words")
    gsub = g.add_subparsers(dest="pvt_cmd", required=True)
    sp = gsub.add_parser("wp", help="is this pure word trivial?")
    sp.add_argument("--n", type=int, required=True, help="number of strands")
    sp.add_argument("word", help="lambda tokens 'L1,2 L1,3^-1' (or s/r with --vt)")
    sp.add_argument("--vt", action="store_true",
                    help="read twin generators 's1 r2 ...' instead")
    add_json(sp)
    sp.set_defaults(func=cmd_pvt_wp)
    sp = gsub.add_parser("diagram", help="write the word's diagram to a file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("word")
    sp.add_argument("--vt", action="store_true")
    sp.add_argument("--out", required=True)
    add_json(sp)
    sp.set_defaults(func=cmd_pvt_diagram)
    sp = gsub.add_parser("relators", help="check the defining relators map to identity")
    sp.add_argument("--n", type=int, required=True)
    add_json(sp)
    sp.set_defaults(func=cmd_pvt_relators)

    sp = sub.add_parser("suite", help="run a seeded property suite")
    sp.add_argument("name", choices=sorted(suite_mod.SUITES))
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--count", type=int, default=None)
    add_json(sp)
    sp.set_defaults(func=cmd_suite)

    return p


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (DiagrammaError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
