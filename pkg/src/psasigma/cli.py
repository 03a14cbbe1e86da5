"""Command line interface.

Commands operate on a graph file (JSON or edge-list text, sniffed by leading
brace) and optionally a character file, and print JSON or text.  Exit codes:
0 success, 1 domain error (bad input, failed selftest), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .characters import parse_character, sigma_membership, sphere_dimension
from .errors import DomainError
from .families import maximal_delta_psets, maximal_psets
from .graph import SimplicialGraph, find_sils, parse_graph
from .oracle import DEFAULT_SEED, default_corpus, run_selftest
from .pconj import pair_case, partial_conjugations, presentation
from .raag import (
    counting_check_psa,
    counting_check_raag,
    maximal_missing_subspheres,
    parse_raag_character,
    psa_complement_subspheres,
    raag_sigma_verdict,
    theorem_b,
)

SCHEMA_VERSION = 1


def _load_graph(args) -> SimplicialGraph:
    try:
        text = Path(args.graph).read_text()
    except OSError as e:
        raise DomainError(f"cannot read graph file: {e}") from e
    fmt = "json" if text.lstrip().startswith("{") else "edgelist"
    return parse_graph(text, fmt)


def _load_text(path: str, what: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise DomainError(f"cannot read {what} file: {e}") from e


def _emit(args, payload: dict, text_lines) -> int:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in text_lines():
            print(line)
    return 0


def _clip(s: str, width: int = 40) -> str:
    return s if len(s) <= width else s[: width - 3] + "..."


# -- command handlers ---------------------------------------------------------


def _cmd_pcs(args) -> int:
    g = _load_graph(args)
    pcs = partial_conjugations(g)
    dim = sphere_dimension(g)
    payload = {
        "partial_conjugations": [p.pc_id for p in pcs],
        "sphere_dimension": dim,
    }

    def text():
        for p in pcs:
            yield _clip(p.pc_id)
        if dim is None:
            yield "no partial conjugations: trivial group, no character sphere"
        else:
            yield f"sphere dimension: {dim}"

    return _emit(args, payload, text)


def _cmd_presentation(args) -> int:
    g = _load_graph(args)
    pres = presentation(g)

    def text():
        yield f"generators ({len(pres.generators)}):"
        for p in pres.generators:
            yield "  " + _clip(p.pc_id)
        yield f"relations ({len(pres.relations)}):"
        for r in pres.relations:
            d = r.to_json_dict()
            if d["type"] == "comm":
                yield _clip(f"  [{d['p']}, {d['q']}] = 1", 76)
            else:
                k = ",".join(d["K"])
                l = ",".join(d["L"])
                yield _clip(
                    f"  [{d['letter']}:{{{k}}} {d['letter']}:{{{l}}}, {d['b']}:{{{l}}}] = 1", 76
                )

    return _emit(args, pres.to_json_dict(), text)


def _cmd_pairs(args) -> int:
    g = _load_graph(args)
    pcs = partial_conjugations(g)
    rows = []
    for i, p in enumerate(pcs):
        for q in pcs[i + 1:]:
            if p.letter == q.letter:
                continue
            case = pair_case(g, p, q)
            rows.append(
                {"p": p.pc_id, "q": q.pc_id, "case": int(case), "commutes": case.commutes}
            )

    def text():
        for r in rows:
            mark = "commute" if r["commutes"] else "no"
            yield f"{_clip(r['p'])}  {_clip(r['q'])}  case {r['case']}  {mark}"

    return _emit(args, {"pairs": rows}, text)


def _families_payload(fams) -> dict:
    return {"families": [f.to_json_dict() for f in fams]}


def _families_text(fams):
    for f in fams:
        s1 = ", ".join(_clip(p.pc_id) for p in f.side1)
        s2 = ", ".join(_clip(p.pc_id) for p in f.side2)
        yield f"{{{s1}}} | {{{s2}}}"
    if not fams:
        yield "none"


def _cmd_psets(args) -> int:
    g = _load_graph(args)
    fams = maximal_psets(g)
    return _emit(args, _families_payload(fams), lambda: _families_text(fams))


def _cmd_delta_psets(args) -> int:
    g = _load_graph(args)
    fams = maximal_delta_psets(g)
    return _emit(args, _families_payload(fams), lambda: _families_text(fams))


def _cmd_sils(args) -> int:
    g = _load_graph(args)
    sils = find_sils(g)
    payload = {"sils": [w.to_json_dict() for w in sils]}

    def text():
        for w in sils:
            yield f"({w.a}, {w.b})  component {{{','.join(sorted(w.component))}}}"
        if not sils:
            yield "none"

    return _emit(args, payload, text)


def _cmd_classify(args) -> int:
    g = _load_graph(args)
    chi = parse_character(g, _load_text(args.character, "character"))
    verdict = sigma_membership(g, chi)

    def text():
        yield f"type: {verdict.type.value}"
        yield f"membership: {verdict.membership}"
        if verdict.reason:
            yield f"reason: {verdict.reason}"
        if verdict.witness_family is not None:
            fam = verdict.witness_family
            s1 = ", ".join(_clip(p.pc_id) for p in fam.side1)
            s2 = ", ".join(_clip(p.pc_id) for p in fam.side2)
            yield f"witness {fam.kind}: {{{s1}}} | {{{s2}}}"

    return _emit(args, verdict.to_json_dict(), text)


def _cmd_sigma_raag(args) -> int:
    g = _load_graph(args)
    psi = parse_raag_character(g, _load_text(args.character, "character"))
    verdict = raag_sigma_verdict(g, psi)

    def text():
        yield f"membership: {'sigma' if verdict.in_sigma else 'complement'}"
        yield f"support: {{{','.join(verdict.support)}}}"
        yield f"connected: {verdict.connected}  dominating: {verdict.dominating}"

    return _emit(args, verdict.to_json_dict(), text)


def _cmd_subspheres(args) -> int:
    g = _load_graph(args)
    missing = maximal_missing_subspheres(g)
    psa = psa_complement_subspheres(g)
    payload = {
        "missing": [s.to_json_dict() for s in missing],
        "psa_complement": [s.to_json_dict() for s in psa],
    }

    def text():
        yield "maximal missing subspheres:"
        for s in missing:
            yield f"  {{{','.join(s.support)}}}  dim {s.dimension}"
        if not missing:
            yield "  none"
        yield "automorphism-side complement subspheres:"
        for s in psa:
            yield f"  [{s.kind}] dim {s.dimension}: " + _clip(", ".join(s.support), 70)
        if not psa:
            yield "  none"

    return _emit(args, payload, text)


def _cmd_counting(args) -> int:
    g = _load_graph(args)
    payload = {
        "raag": counting_check_raag(g).to_json_dict(),
        "psa": counting_check_psa(g).to_json_dict(),
    }

    def text():
        for key in ("raag", "psa"):
            r = payload[key]
            if r["vacuous"]:
                yield f"{key}: vacuous (lhs {r['lhs']}, no subspheres)"
            else:
                mark = "ok" if r["holds"] else "FAIL"
                yield f"{key}: {r['lhs']} = {r['rhs']}  {mark}"

    return _emit(args, payload, text)


def _cmd_theorem_b(args) -> int:
    g = _load_graph(args)
    verdict = theorem_b(g)
    payload = verdict.to_json_dict()
    payload["counting"] = {
        "raag": counting_check_raag(g).to_json_dict(),
        "psa": counting_check_psa(g).to_json_dict(),
    }

    def text():
        yield f"automorphism group is a RAAG: {verdict.is_raag}"
        if verdict.sil is not None:
            w = verdict.sil
            yield f"SIL: ({w.a}, {w.b}) component {{{','.join(sorted(w.component))}}}"
        if verdict.delta_family is not None:
            fam = verdict.delta_family
            s1 = ", ".join(_clip(p.pc_id) for p in fam.side1)
            s2 = ", ".join(_clip(p.pc_id) for p in fam.side2)
            yield f"delta-p-set witness: {{{s1}}} | {{{s2}}}"

    return _emit(args, payload, text)


def _cmd_selftest(args) -> int:
    report = run_selftest(seed=args.seed, graphs=args.budget)
    if args.junit:
        Path(args.junit).write_text(report.junit_xml())
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False))
    else:
        print(f"graphs checked: {report.graphs}")
        print(f"characters checked: {report.characters}")
        for f in report.failures:
            print(f"FAIL graph {f['index']}: {f['failure']}")
            print(f"  {f['graph']}")
        if report.notes:
            print(f"notes: {len(report.notes)} (see --format json for detail)")
        print("result: " + ("ok" if report.ok else "FAILED"))
    return 0 if report.ok else 1


def _cmd_gen_corpus(args) -> int:
    for g in default_corpus(seed=args.seed, count=args.budget):
        print(json.dumps(g.to_json_dict(), separators=(",", ":"), sort_keys=False))
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psasigma",
        description="BNS invariant computations for pure symmetric automorphism groups "
        "of right-angled Artin groups",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"psasigma {__version__} (schema {SCHEMA_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help, graph=True, character=False):
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        if graph:
            p.add_argument("--graph", required=True, help="path to a graph file")
        if character:
            p.add_argument("--character", required=True, help="path to a character file")
        p.add_argument("--format", choices=("json", "text"), default="text")
        return p

    add("pcs", _cmd_pcs, "list the partial conjugations and the sphere dimension")
    add("presentation", _cmd_presentation, "print the finite presentation")
    add("pairs", _cmd_pairs, "classify every distinct-letter PC pair")
    add("psets", _cmd_psets, "list the maximal p-sets")
    add("delta-psets", _cmd_delta_psets, "list the maximal delta-p-sets")
    add("sils", _cmd_sils, "list the SIL witnesses")
    add("classify", _cmd_classify, "decide a character's sigma membership", character=True)
    add("sigma-raag", _cmd_sigma_raag, "decide a vertex character's membership "
        "in the RAAG's invariant", character=True)
    add("subspheres", _cmd_subspheres, "list missing and complement subspheres")
    add("counting", _cmd_counting, "run both counting identity checks")
    add("theorem-b", _cmd_theorem_b, "decide whether the automorphism group is a RAAG")

    st = add("selftest", _cmd_selftest, "cross-check engine against brute force "
             "on the random corpus", graph=False)
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    st.add_argument("--budget", type=int, default=100, help="number of corpus graphs")
    st.add_argument("--junit", help="also write a JUnit XML report to this path")

    gc = add("gen-corpus", _cmd_gen_corpus, "print corpus graphs as JSON lines",
             graph=False)
    gc.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gc.add_argument("--budget", type=int, default=100, help="number of graphs to emit")

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.handler(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
