"""Command-line frontend.

Two-level grammar (`lattice ...`, `topo ...`) mirroring the library split.
Exit codes: 0 = embeds / unobstructed / consistent, 2 = does not embed /
obstructed / inconsistent, 3 = inconclusive (even-order caveat), 1 = error.
Errors print a single machine-parsable line: "error: <CODE>: <message>".
"""

import argparse
import json
import sys
from fractions import Fraction

from . import (corrterm, discgroup, exactmat, lattice as lattice_mod, oracle,
               topo)
from .overlattice import int_gram, overlattice as build_overlattice
from .errors import LatcorrError, OracleDisagreement, SearchTooLarge

VERDICT_EXIT = {"unobstructed": 0, "obstructed": 2, "inconclusive": 3}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise LatcorrError(message)


def _frac(x):
    return str(Fraction(x))


def _pairing_json(pairing):
    return [[_frac(x) for x in row] for row in pairing]


def _subgroup_json(m):
    return {"elements": [list(e) for e in m.elements],
            "generators": [list(e) for e in m.generators]}


def build_parser():
    parser = _Parser(prog="latcorr",
                     description="Lattice embedding obstructions via "
                                 "correction terms of unimodular overlattices.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--oracle", action="store_true",
                        help="run brute-force cross-checks; fail on disagreement")
    common.add_argument("--max-group", type=int, default=discgroup.DEFAULT_GROUP_CAP,
                        metavar="N", help="cap on discriminant group order")
    common.add_argument("--threads", type=int, default=1, metavar="N")

    sub = parser.add_subparsers(dest="domain", required=True, parser_class=_Parser)

    lat = sub.add_parser("lattice")
    lat_sub = lat.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("info", "metabolizers", "dset", "embed-check", "dinv"):
        p = lat_sub.add_parser(name, parents=[common])
        p.add_argument("file", help="lattice JSON file {\"gram\": [[ints]]}")

    top = sub.add_parser("topo")
    top_sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = top_sub.add_parser("linking-form", parents=[common])
    p.add_argument("file", help="filling intersection form JSON file")
    for name in ("rb-obstruction", "filling-obstruction"):
        p = top_sub.add_parser(name, parents=[common])
        p.add_argument("--dtable", required=True, help="d-invariant table JSON file")
    p = top_sub.add_parser("chain", parents=[common])
    p.add_argument("--filling", required=True, help="filling intersection form JSON file")
    p.add_argument("--dtable", required=True, help="d-invariant table JSON file")

    return parser


def _validate(args):
    if args.max_group <= 0:
        raise LatcorrError("--max-group must be positive")
    if args.threads <= 0:
        raise LatcorrError("--threads must be positive")


def _check_embed_oracle(lat, embeds, notes):
    try:
        found, _ = oracle.brute_embed(lat)
    except SearchTooLarge:
        notes.append("oracle: brute_embed skipped (beyond caps)")
        return
    if found != embeds:
        raise OracleDisagreement(
            f"brute_embed found {found}, optimized path found {embeds}")
    notes.append("oracle: brute_embed agrees")


def _check_char_min_oracle(obj, minimum, notes):
    if isinstance(obj, lattice_mod.Lattice):
        gram = obj.gram_rows()
    else:
        gram = int_gram(obj)
    ginv = exactmat.inverse(gram)
    w0 = [gram[i][i] % 2 for i in range(len(gram))]
    bound = sum(w0[i] * ginv[i][j] * w0[j]
                for i in range(len(gram)) for j in range(len(gram)))
    brute = oracle.brute_char_min(obj, int(bound))
    if brute != minimum:
        raise OracleDisagreement(
            f"brute_char_min found {brute}, optimized path found {minimum}")
    notes.append("oracle: brute_char_min agrees")


def _check_metabolizer_oracle(grp, mets, notes):
    try:
        subs = oracle.brute_subgroups(grp)
    except SearchTooLarge:
        notes.append("oracle: brute_subgroups skipped (beyond caps)")
        return
    expected = [s for s in subs
                if s.order ** 2 == grp.order
                and all(discgroup.lam(grp, x, y) == 0
                        for x in s.generators for y in s.generators)]
    if [m.elements for m in mets] != [s.elements for s in expected]:
        raise OracleDisagreement("metabolizer sets disagree with the oracle")
    notes.append("oracle: metabolizers agree")


def _dset_payload(lat, args, notes):
    mets = discgroup.metabolizers(lat, cap=args.max_group)
    if args.oracle:
        _check_metabolizer_oracle(discgroup.disc_group(lat), mets, notes)
    entries = []
    for m in mets:
        u = build_overlattice(lat, m)
        res = corrterm.min_char_square(u)
        d = Fraction(res.minimum - lat.rank, 4)
        if args.oracle:
            _check_char_min_oracle(u, res.minimum, notes)
        entries.append({"metabolizer": [list(e) for e in m.elements],
                        "min_char_square": res.minimum,
                        "witness": [_frac(x) for x in res.witness],
                        "d": _frac(d)})
    return entries


def _run_lattice(args):
    lat = lattice_mod.load_lattice(args.file)
    notes = []
    if args.command == "info":
        grp = discgroup.disc_group(lat)
        return 0, {
            "rank": lat.rank,
            "definite": "negative" if lat.negated else "positive",
            "orientation": "negated" if lat.negated else "as-given",
            "disc": lattice_mod.discriminant(lat),
            "orders": list(grp.orders),
            "pairing": _pairing_json(grp.pairing),
        }
    if args.command == "metabolizers":
        mets = discgroup.metabolizers(lat, cap=args.max_group)
        if args.oracle:
            _check_metabolizer_oracle(discgroup.disc_group(lat), mets, notes)
        return 0, {"metabolizers": [_subgroup_json(m) for m in mets],
                   "notes": notes}
    if args.command == "dset":
        entries = _dset_payload(lat, args, notes)
        return 0, {"entries": entries,
                   "contains_zero": any(e["d"] == "0" for e in entries),
                   "notes": notes}
    if args.command == "embed-check":
        entries = _dset_payload(lat, args, notes)
        embeds = any(e["d"] == "0" for e in entries)
        if args.oracle:
            _check_embed_oracle(lat, embeds, notes)
        payload = {"embeds": embeds,
                   "verdict": "embeds in the standard lattice" if embeds
                   else "does not embed in the standard lattice",
                   "orientation": "negated" if lat.negated else "as-given",
                   "entries": entries, "notes": notes}
        return (0 if embeds else 2), payload
    if args.command == "dinv":
        res = corrterm.min_char_square(lat)
        if args.oracle:
            _check_char_min_oracle(lat, res.minimum, notes)
        d = Fraction(res.minimum - lat.rank, 4)
        return 0, {"d": _frac(d), "min_char_square": res.minimum,
                   "witness": [_frac(x) for x in res.witness], "notes": notes}
    raise LatcorrError(f"unknown lattice command {args.command}")


def _report_json(report):
    out = {"verdict": report.verdict}
    if report.reason:
        out["reason"] = report.reason
    if report.caveat:
        out["caveat"] = report.caveat
    if report.orientation_note:
        out["orientation_note"] = report.orientation_note
    evidence = []
    for rec in report.evidence:
        item = {"metabolizer": [list(e) for e in rec.metabolizer.elements]}
        if rec.d_values is not None:
            item["d_values"] = [{"elem": list(e), "value": _frac(v)}
                                for e, v in rec.d_values]
        if rec.d_over is not None:
            item["d_overlattice"] = _frac(rec.d_over)
        if rec.constrained is not None:
            item["constrained_min"] = _frac(rec.constrained)
        if rec.table_min is not None:
            item["table_min"] = _frac(rec.table_min)
        if rec.chain_holds is not None:
            item["chain_holds"] = rec.chain_holds
        if rec.failure is not None:
            item["failure"] = rec.failure
        evidence.append(item)
    out["evidence"] = evidence
    return out


def _run_topo(args):
    if args.command == "linking-form":
        filling = topo.linking_form_of_filling(_load_gram(args.file))
        return 0, {
            "orders": list(filling.group.orders),
            "pairing": _pairing_json(filling.boundary_pairing),
            "orientation": "negated" if filling.negated else "as-given",
        }
    if args.command in ("rb-obstruction", "filling-obstruction"):
        table = topo.load_dtable(args.dtable)
        if args.command == "rb-obstruction":
            report = topo.rb_correction_obstruction(table, cap=args.max_group)
        else:
            report = topo.definite_filling_obstruction(table, cap=args.max_group)
        return VERDICT_EXIT[report.verdict], _report_json(report)
    if args.command == "chain":
        table = topo.load_dtable(args.dtable)
        report = topo.chain_check(_load_gram(args.filling), table,
                                  cap=args.max_group, threads=args.threads)
        return VERDICT_EXIT[report.verdict], _report_json(report)
    raise LatcorrError(f"unknown topo command {args.command}")


def _load_gram(path):
    lat = lattice_mod.load_lattice(path)
    gram = lat.gram_rows()
    if lat.negated:
        gram = [[-x for x in row] for row in gram]
    return gram


def _render_text(payload, out):
    def emit(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                emit(f"{prefix}{k}.", v)
        elif isinstance(value, list) and any(
                isinstance(v, (dict, list)) for v in value):
            for i, v in enumerate(value):
                emit(f"{prefix}{i}.", v)
        else:
            out.write(f"{prefix[:-1]}: {value}\n")

    emit("", payload)


def run(argv):
    """Parse argv, execute, render; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args)
    if args.domain == "lattice":
        code, payload = _run_lattice(args)
    else:
        code, payload = _run_topo(args)
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        _render_text(payload, sys.stdout)
    return code


def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except LatcorrError as e:
        sys.stderr.write(f"error: {e.code}: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
