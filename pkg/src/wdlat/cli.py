"""Command line surface.

Every command loads one instance (``--file`` or ``--builtin``), runs
the requested checks and prints text or JSON (``--json``).  Exit codes:
0 for success including documented findings, 1 when a law that must
hold fails, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import congruence as cg
from . import filters as flt
from . import sfilters as sfl
from . import spectra as spc
from .dicomplement import (Dicomplementation, attach, axiom_report,
                           check_identities, enumerate_dicomplementations,
                           nearlattice_check, skeleton_report)
from .errors import LatticeError
from .instances import BUILTIN_NAMES, builtin, recorded_findings_report
from .lattice import BoundedLattice, build_lattice
from .reports import FAIL, Report, law_catalog
from .textio import parse, to_dot

OK, LAW_FAILURE, INPUT_ERROR = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wdlat",
        description="Finite weakly dicomplemented lattices: build instances "
                    "and check the theorem catalog against them.")
    sub = p.add_subparsers(dest="command", required=True)
    commands = {
        "validate": "build the instance and check the defining axioms",
        "laws": "check the derived identities",
        "filters": "enumerate filters and check the filter lattice theorems",
        "sfilters": "enumerate S-filters and check the correspondence theorems",
        "spectra": "classify filters as prime, primary or maximal",
        "congruences": "enumerate congruences and check the structure theorems",
        "verify-all": "run every law in the catalog",
        "export-dot": "emit the Hasse diagram in DOT",
        "enumerate": "list all weak (di)complementations on the bare lattice",
    }
    for name, help_text in commands.items():
        c = sub.add_parser(name, help=help_text)
        src = c.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", type=Path, help="instance in the text format")
        src.add_argument("--builtin", metavar="NAME",
                         help="built-in instance: " + ", ".join(BUILTIN_NAMES))
        c.add_argument("--json", action="store_true", help="machine output")
        c.add_argument("--max-size", type=int, default=None,
                       help="override the enumeration cap")
        if name == "enumerate":
            c.add_argument("--side", choices=("delta", "nabla"),
                           default="delta", help="which unary table to search")
    return p


def _load(args) -> tuple[str, BoundedLattice, Dicomplementation | None]:
    if args.builtin:
        D = builtin(args.builtin)
        return args.builtin, D.base, D
    text = args.file.read_text(encoding="utf-8")
    spec = parse(text)
    lat = build_lattice(spec)
    if spec.delta is None and spec.nabla is None:
        return str(args.file), lat, None
    D = attach(lat, delta=dict(spec.delta) if spec.delta else None,
               nabla=dict(spec.nabla) if spec.nabla else None)
    return str(args.file), lat, D


def _need_tables(D: Dicomplementation | None) -> Dicomplementation:
    if D is None:
        raise LatticeError("this command needs delta or nabla tables; "
                           "the input is a bare lattice")
    return D


def _cap(args, default: int) -> int:
    return args.max_size if args.max_size is not None else default


def _emit(args, name: str, reports: list[Report], extra: dict | None = None) -> int:
    code = LAW_FAILURE if any(
        r.status == FAIL for rep in reports for r in rep.results) else OK
    if args.json:
        doc = {"instance": name, "command": args.command}
        doc.update(extra or {})
        doc["reports"] = [rep.as_dict() for rep in reports]
        doc["ok"] = code == OK
        print(json.dumps(doc, indent=2))
    else:
        for key, value in (extra or {}).items():
            print(f"{key}: {json.dumps(value)}")
        for rep in reports:
            for line in rep.lines():
                print(line)
            print(rep.summary())
            print()
        print("ok" if code == OK else "law failures present")
    return code


def _all_reports(name: str, D: Dicomplementation, filter_cap: int,
                 cong_cap: int) -> list[Report]:
    reports = [axiom_report(D), check_identities(D)]
    if D.has_delta:
        reports.append(skeleton_report(D, "interior"))
    if D.has_nabla:
        reports.append(skeleton_report(D, "closed"))
    reports.append(nearlattice_check(D))
    if D.has_delta:
        reports.extend([
            flt.filter_lattice_dual_wcl(D, filter_cap)[1],
            flt.pseudocomplement_checks(D, filter_cap),
            flt.principal_dual_iso(D),
            sfl.phi_iso_check(D, filter_cap),
            sfl.s_principal_ortholattice(D),
            spc.verify_spectral_theorems(D, filter_cap),
            cg.structure_checks(D, cong_cap),
            cg.join_formula_check(D, cong_cap),
            cg.permutability_check(D, cong_cap),
        ])
    reports.append(recorded_findings_report(name, D))
    return reports


def _classifications(D: Dicomplementation, max_size: int) -> tuple[list, list]:
    on_l = [spc.classify(D, f, universe="L").as_dict()
            for f in flt.enumerate_filters(D, max_size)]
    on_skel = []
    for mask in sfl.skeleton_filter_masks(D, max_size):
        f = flt.Filter(D.base, mask)
        on_skel.append(spc.classify(D, f, universe="skeleton").as_dict())
    return on_l, on_skel


def run(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        name, lat, D = _load(args)
        if args.command == "validate":
            extra = {"elements": list(lat.names),
                     "covers": [[lat.names[i], lat.names[j]]
                                for i, j in lat.covers],
                     "distributive": lat.is_distributive(),
                     "tables": ([] if D is None else
                                (["delta"] if D.has_delta else []) +
                                (["nabla"] if D.has_nabla else []))}
            reports = [] if D is None else [axiom_report(D)]
            return _emit(args, name, reports, extra)
        if args.command == "laws":
            return _emit(args, name, [check_identities(_need_tables(D))])
        if args.command == "filters":
            D = _need_tables(D)
            cap = _cap(args, flt.FILTER_CAP)
            members = [list(f.members)
                       for f in flt.enumerate_filters(D, cap)]
            return _emit(args, name,
                         [flt.filter_lattice_dual_wcl(D, cap)[1],
                          flt.pseudocomplement_checks(D, cap),
                          flt.principal_dual_iso(D)],
                         {"filters": members})
        if args.command == "sfilters":
            D = _need_tables(D)
            cap = _cap(args, flt.FILTER_CAP)
            listing = [{"members": list(f.members),
                        "trace": list(sfl.trace(D, f))}
                       for f in sfl.enumerate_s_filters(D, cap)]
            return _emit(args, name,
                         [sfl.phi_iso_check(D, cap),
                          sfl.s_principal_ortholattice(D)],
                         {"sfilters": listing})
        if args.command == "spectra":
            D = _need_tables(D)
            cap = _cap(args, flt.FILTER_CAP)
            on_l, on_skel = _classifications(D, cap)
            return _emit(args, name, [spc.verify_spectral_theorems(D, cap)],
                         {"classifications": on_l,
                          "skeleton_classifications": on_skel})
        if args.command == "congruences":
            D = _need_tables(D)
            cap = _cap(args, cg.CONGRUENCE_CAP)
            cons = [c.as_dict() for c in cg.enumerate_congruences(D, cap)]
            det_witness = cg.congruence_witness(
                D, cg.determination_partition(D))
            extra = {"congruences": cons,
                     "determination": {
                         "blocks": [list(b)
                                    for b in cg.determination_partition(D)],
                         "is_congruence": det_witness is None},
                     "regular": cg.regular(D, cap)}
            return _emit(args, name,
                         [cg.structure_checks(D, cap),
                          cg.join_formula_check(D, cap),
                          cg.permutability_check(D, cap)], extra)
        if args.command == "verify-all":
            D = _need_tables(D)
            reports = _all_reports(name, D, _cap(args, flt.FILTER_CAP),
                                   _cap(args, cg.CONGRUENCE_CAP))
            emitted = {r.law_id for rep in reports for r in rep.results}
            missing = sorted(set(law_catalog()) - emitted)
            extra = {"laws_emitted": len(emitted),
                     "laws_registered": len(law_catalog())}
            if missing:
                extra["laws_missing"] = missing
            return _emit(args, name, reports, extra)
        if args.command == "export-dot":
            dot = to_dot(D if D is not None else lat)
            if args.json:
                print(json.dumps({"instance": name, "dot": dot}, indent=2))
            else:
                print(dot, end="")
            return OK
        if args.command == "enumerate":
            cap = _cap(args, 6)
            found = enumerate_dicomplementations(lat, side=args.side,
                                                 max_size=cap)
            tables = [{x: getattr(E, args.side)[x] for x in lat.names}
                      for E in found]
            if args.json:
                print(json.dumps({"instance": name, "side": args.side,
                                  "count": len(tables), "tables": tables},
                                 indent=2))
            else:
                print(f"{len(tables)} {args.side} tables on {name}")
                for t in tables:
                    print("  " + " ".join(f"{x}->{t[x]}" for x in lat.names))
            return OK
        raise AssertionError(f"unhandled command {args.command}")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except LatticeError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(run())
