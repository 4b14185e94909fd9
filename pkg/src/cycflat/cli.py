"""``cycflat`` command-line entry point.

Exit status is 0 when a verdict was computed (negative verdicts included),
1 for invalid input and 2 when a size cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io, ops
from .errors import CycflatError, SizeLimitExceeded
from .lattice import Lattice, chain, is_distributive, order_dual, width
from .matroid import (contract, delete, direct_sum, dual, format_set, is_self_consistent,
                      zeta_lattice)
from .mi import classify_tr, is_mi_lattice
from .realization import enumerate_rank_assignments, realize
from .transversal import is_transversal_mi, presentation_search_oracle
from .witness import build_witness, first_branching_element

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _lattice(path: str) -> Lattice:
    return io.parse_lattice_file(_read(path))


def _matroid(path: str):
    return io.parse_matroid_file(_read(path))


def _dump(payload: dict) -> str:
    return json.dumps({"schema_version": io.SCHEMA_VERSION, **payload},
                      sort_keys=True, indent=2) + "\n"


def _lines(pairs) -> str:
    return "".join(f"{k}: {io._plain(v)}\n" for k, v in pairs)


# --- lattice ---------------------------------------------------------------

def cmd_lattice_check(args) -> str:
    L = _lattice(args.file)
    info = {"elements": len(L), "width": width(L), "height": L.heights()[L.top],
            "distributive": is_distributive(L)}
    if args.json:
        return _dump({"type": "lattice_check", **info})
    return _lines([("lattice", "ok"), *info.items()])


def cmd_lattice_classify(args) -> str:
    L = _lattice(args.file)
    verdict = classify_tr(L)
    d = verdict.as_dict(L)
    if args.json:
        return _dump({"type": "verdict", **d})
    return _lines(d.items())


def _labels(L: Lattice, text: str) -> list[int]:
    out = []
    for lab in text.split(","):
        lab = lab.strip()
        if lab not in L._index:
            raise CycflatError(f"unknown element {lab!r}")
        out.append(L.index(lab))
    return out


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CycflatError(f"expected comma-separated integers, got {text!r}") from None


def cmd_lattice_op(args) -> str:
    name, files = args.operation, args.files
    binary = {"linear-sum": ops.linear_sum, "identify-sum": ops.identify_sum,
              "star": ops.star, "product": ops.direct_product}
    want = {"coatom-chain": 0, "dual": 1, "ideal-adjoin-top": 1, "lex-sum": 1}.get(name, 2)
    if len(files) != want:
        raise CycflatError(f"{name} takes {want} lattice file(s), got {len(files)}")
    if name in binary:
        result = binary[name](_lattice(files[0]), _lattice(files[1]))
    elif name == "dual":
        result = order_dual(_lattice(files[0]))
    elif name == "ideal-adjoin-top":
        if not args.ideal:
            raise CycflatError("ideal-adjoin-top needs --ideal")
        L = _lattice(files[0])
        result = ops.ideal_adjoin_top(L, _labels(L, args.ideal))
    elif name == "lex-sum":
        L = _lattice(files[0])
        family = {x: chain(1) for x in range(len(L))}
        for item in args.fiber or []:
            lab, _, path = item.partition("=")
            if not path:
                raise CycflatError(f"--fiber expects LABEL=FILE, got {item!r}")
            family[_labels(L, lab)[0]] = _lattice(path)
        result = ops.lex_sum(L, family)
    else:
        if args.segments is None:
            raise CycflatError("coatom-chain needs --segments")
        result = ops.coatom_chain_lattice(_ints(args.segments), _ints(args.depths or ""))
    return io.emit(result, "json" if args.json else "text")


# --- matroid ---------------------------------------------------------------

def cmd_matroid_check(args) -> str:
    M = _matroid(args.file)
    info = {"ground": M.n, "rank": M.full_rank, "cyclic_flats": len(M.flats),
            "self_consistent": is_self_consistent(M)}
    if args.json:
        return _dump({"type": "matroid_check", **info})
    return _lines([("matroid", "ok"), *info.items()])


def cmd_matroid_zeta(args) -> str:
    M = _matroid(args.file)
    Z, ranks = zeta_lattice(M)
    Z = Z.relabel([format_set(f) for f in M.flats])
    if args.json:
        return _dump({**io.to_dict(Z), "type": "zeta", "ranks": list(ranks)})
    rank_line = " ".join(f"{lab}={r}" for lab, r in zip(Z.labels, ranks))
    return io.emit(Z) + f"# ranks: {rank_line}\n"


def _emit_matroid(M, args) -> str:
    return io.emit(M, "json" if args.json else "text")


def cmd_matroid_dual(args) -> str:
    return _emit_matroid(dual(_matroid(args.file)), args)


def _element(M, e: int) -> int:
    if not 0 <= e < M.n:
        raise CycflatError(f"element {e} outside ground set of size {M.n}")
    return e


def cmd_matroid_delete(args) -> str:
    M = _matroid(args.file)
    return _emit_matroid(delete(M, _element(M, args.element)), args)


def cmd_matroid_contract(args) -> str:
    M = _matroid(args.file)
    return _emit_matroid(contract(M, _element(M, args.element)), args)


def cmd_matroid_sum(args) -> str:
    return _emit_matroid(direct_sum(_matroid(args.first), _matroid(args.second)), args)


def cmd_matroid_transversal(args) -> str:
    report = is_transversal_mi(_matroid(args.file))
    return io.emit(report, "json" if args.json else "text")


def cmd_matroid_oracle(args) -> str:
    system = presentation_search_oracle(_matroid(args.file))
    found = system is not None
    sets = [format_set(s) for s in system] if found else None
    if args.json:
        return _dump({"type": "presentation", "transversal": found, "presentation": sets})
    return _lines([("transversal", found), ("presentation", sets)])


# --- realize / witness / corpus ------------------------------------------

def _rank_text(L: Lattice, rho) -> str:
    return ",".join(f"{lab}={r}" for lab, r in zip(L.labels, rho))


def cmd_realize(args) -> str:
    L = _lattice(args.file)
    if args.enumerate == (args.ranks is not None):
        raise CycflatError("give exactly one of --ranks or --enumerate")
    if args.ranks is not None:
        assignments = [io.parse_ranks(L, args.ranks)]
    else:
        if args.max_top is None:
            raise CycflatError("--enumerate needs --max-top")
        assignments = list(enumerate_rank_assignments(L, args.max_top))
    results = [(rho, realize(L, rho)) for rho in assignments]
    if args.json:
        return _dump({"type": "realizations", "realizations": [
            {"ranks": dict(zip(map(str, L.labels), rho)),
             "phi": {str(lab): format_set(f) for lab, f in zip(L.labels, R.phi)},
             "matroid": io.to_dict(R.matroid)} for rho, R in results]})
    chunks = [f"# ranks: {_rank_text(L, rho)}\n" + io.emit(R.matroid) for rho, R in results]
    return "\n".join(chunks)


def cmd_witness(args) -> str:
    L = _lattice(args.file)
    if args.element is not None:
        x = _labels(L, args.element)[0]
    else:
        x = first_branching_element(L)
        if x is None:
            raise CycflatError("no element has three or more covers")
    w = build_witness(L, x)
    lab = L.labels
    triple = [str(lab[t]) for t in w.triple]
    flats = [format_set(f) for f in w.violators]
    if args.json:
        return _dump({"type": "witness", "element": str(lab[x]), "k": w.k,
                      "triple": triple, "ranks": dict(zip(map(str, lab), w.rho)),
                      "violating_flats": flats, "alternating_sum": w.alternating_sum,
                      "intersection_rank": w.rho[x], "matroid": io.to_dict(w.matroid)})
    head = _lines([("element", lab[x]), ("k", w.k), ("triple", triple),
                   ("ranks", _rank_text(L, w.rho)), ("violating_flats", flats),
                   ("alternating_sum", w.alternating_sum), ("intersection_rank", w.rho[x])])
    return head + io.emit(w.matroid)


def cmd_corpus(args) -> str:
    from .corpus import generate_corpus

    records = []
    for L, rho, R in generate_corpus(args.max_size, args.max_top):
        records.append({"lattice": io.to_dict(L)["covers"], "elements": len(L),
                        "ranks": list(rho), "ground": R.matroid.n,
                        "mi_lattice": is_mi_lattice(L)[0]})
    if args.json:
        return _dump({"type": "corpus", "max_size": args.max_size,
                      "max_top": args.max_top, "count": len(records), "items": records})
    out = [f"# {len(records)} realizations\n"]
    for i, r in enumerate(records):
        out.append(f"{i} elements={r['elements']} ranks={' '.join(map(str, r['ranks']))} "
                   f"ground={r['ground']} mi_lattice={r['mi_lattice']}\n")
    return "".join(out)


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = argparse.ArgumentParser(prog="cycflat",
                                description="Lattices of cyclic flats and transversality.")
    sub = p.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="lattice utilities").add_subparsers(
        dest="action", required=True)
    q = lat.add_parser("check", parents=[common])
    q.add_argument("file")
    q.set_defaults(func=cmd_lattice_check)
    q = lat.add_parser("classify", parents=[common])
    q.add_argument("file")
    q.set_defaults(func=cmd_lattice_classify)
    q = lat.add_parser("op", parents=[common])
    q.add_argument("operation", choices=["linear-sum", "identify-sum", "star", "lex-sum",
                                         "ideal-adjoin-top", "product", "coatom-chain", "dual"])
    q.add_argument("files", nargs="*")
    q.add_argument("--ideal", help="comma-separated labels of the ideal")
    q.add_argument("--fiber", action="append", help="LABEL=FILE (lex-sum, repeatable)")
    q.add_argument("--segments", help="coatom-chain segment lengths, e.g. 3,1,1")
    q.add_argument("--depths", help="coatom-chain branch depths, e.g. 1,2")
    q.set_defaults(func=cmd_lattice_op)

    mat = sub.add_parser("matroid", help="matroid utilities").add_subparsers(
        dest="action", required=True)
    for name, func in [("check", cmd_matroid_check), ("zeta", cmd_matroid_zeta),
                       ("dual", cmd_matroid_dual), ("transversal", cmd_matroid_transversal),
                       ("oracle", cmd_matroid_oracle)]:
        q = mat.add_parser(name, parents=[common])
        q.add_argument("file")
        q.set_defaults(func=func)
    for name, func in [("delete", cmd_matroid_delete), ("contract", cmd_matroid_contract)]:
        q = mat.add_parser(name, parents=[common])
        q.add_argument("file")
        q.add_argument("element", type=int)
        q.set_defaults(func=func)
    q = mat.add_parser("sum", parents=[common])
    q.add_argument("first")
    q.add_argument("second")
    q.set_defaults(func=cmd_matroid_sum)

    q = sub.add_parser("realize", parents=[common], help="realize a ranked lattice")
    q.add_argument("file")
    q.add_argument("--ranks", help='e.g. "0=0,a=2,b=2,1=3"')
    q.add_argument("--enumerate", action="store_true")
    q.add_argument("--max-top", type=int)
    q.set_defaults(func=cmd_realize)

    q = sub.add_parser("witness", parents=[common], help="build a non-transversal witness")
    q.add_argument("file")
    q.add_argument("--element")
    q.set_defaults(func=cmd_witness)

    q = sub.add_parser("corpus", parents=[common], help="list the realized corpus")
    q.add_argument("--max-size", type=int, default=6)
    q.add_argument("--max-top", type=int, default=4)
    q.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except SizeLimitExceeded as exc:
        print(f"cycflat: size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CycflatError, ValueError, OSError) as exc:
        print(f"cycflat: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
