"""Batch command line front end: `hb-cells <subcommand> ...`.

Every invocation is deterministic given its arguments.  Exit codes:
0 success, 1 domain error (infinite colength, inadmissible Hilbert
function, ...), 2 usage error (bad flags, malformed input).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import betti as betti_mod
from . import census as census_mod
from . import generic_cells
from . import hilbert_burch as hb
from .errors import DomainError
from .field import GF, QQ
from .poly import default_names, parse_ideal
from .staircase import HSeries, Staircase


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _field_arg(text):
    if text == "q":
        return QQ
    if text.startswith("p:"):
        try:
            return GF(int(text[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc))
    raise argparse.ArgumentTypeError(f"--field takes 'q' or 'p:<prime>', got {text!r}")


def _staircase(args):
    if getattr(args, "m", None) is not None:
        return Staircase(args.m)
    if getattr(args, "d", None) is not None:
        return Staircase.from_d(args.d)
    raise UsageExit("one of --m or --d is required")


class UsageExit(Exception):
    pass


def _emit(args, text_fn, json_obj, latex_fn=None):
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True))
    elif args.format == "latex":
        if latex_fn is None:
            raise UsageExit("this subcommand has no latex form")
        print(latex_fn())
    else:
        print(text_fn())


def _matrix_lines(rows):
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(cells[r][c]) for r in range(len(cells))) for c in range(len(cells[0]))]
    return "\n".join("[ " + "  ".join(cells[r][c].rjust(widths[c]) for c in range(len(widths))) + " ]"
                     for r in range(len(cells)))


def cmd_frame(args):
    E = _staircase(args)
    frame = hb.canonical_frame(E)
    N0 = hb.CellMatrix.zero(E)

    def text():
        lines = [str(E), "M0:"]
        lines.append(_matrix_lines([[p.to_str() for p in row] for row in frame.M0]))
        lines.append("U:")
        lines.append(_matrix_lines(frame.U))
        lines.append("S: " + (" ".join(f"({i},{j})" for i, j in frame.S) or "(empty)"))
        return "\n".join(lines)

    _emit(args, text, {
        "m": list(E.m),
        "M0": [[p.to_str() for p in row] for row in frame.M0],
        "U": [list(row) for row in frame.U],
        "S": [list(s) for s in frame.S],
    }, latex_fn=N0.to_latex)
    return 0


def cmd_dims(args):
    E = _staircase(args)
    dims = {kind: hb.cell_dimension(E, kind) for kind in hb.CellKind}
    _emit(args, lambda: " ".join(f"{k}={v}" for k, v in sorted(dims.items(), key=lambda kv: kv[0].value)),
          {"m": list(E.m), "dims": {str(k): v for k, v in dims.items()}})
    return 0


def _cell_matrix(args, E):
    if args.cell is not None:
        data = json.loads(args.cell)
        N = hb.CellMatrix.from_json(data, args.field)
        if N.E != E:
            raise UsageExit("--cell staircase disagrees with --m/--d")
        return N
    kind = hb.CellKind(args.kind)
    return hb.random_cell_matrix(E, kind, args.seed, args.field)


def cmd_minors(args):
    E = _staircase(args)
    N = _cell_matrix(args, E)
    fs = hb.minors_ideal(N)
    _emit(args, lambda: "\n".join(f.to_str() for f in fs),
          {"m": list(E.m), "N": N.to_json()["N"], "generators": [f.to_str() for f in fs]},
          latex_fn=N.to_latex)
    return 0


def cmd_canonicalize(args):
    gens = parse_ideal(args.ideal, ("x", "y"), args.field)
    E, N = hb.canonical_matrix(gens)

    def text():
        rows = ",".join("[" + ",".join(e.to_str() for e in row) + "]" for row in N.entries)
        return f"{E}; N=[{rows}]"

    _emit(args, text, N.to_json(), latex_fn=N.to_latex)
    return 0


def cmd_kinds(args):
    gens = parse_ideal(args.ideal, ("x", "y"), args.field)
    kinds = sorted(hb.cell_kinds_of_ideal(gens), key=lambda k: k.value)
    _emit(args, lambda: " ".join(str(k) for k in kinds), {"kinds": [str(k) for k in kinds]})
    return 0


def _parse_assignment(text, E):
    slots = betti_mod.canonical_parameters(E)
    if text == "zero":
        return {s: 0 for s in slots}
    if text == "generic":
        return {s: 1 for s in slots}
    values = {}
    for piece in text.split(","):
        name, _, val = piece.partition("=")
        name = name.strip()
        if not name.startswith("p") or not name[1:].isdigit() or not val:
            raise UsageExit(f"bad parameter assignment {piece!r} (want pK=value)")
        k = int(name[1:])
        if not 1 <= k <= len(slots):
            raise UsageExit(f"parameter {name} out of range (S(E) has {len(slots)} slots)")
        num, _, den = val.partition("/")
        values[slots[k - 1]] = QQ.of(int(num), int(den) if den else 1)
    missing = [k + 1 for k, s in enumerate(slots) if s not in values]
    if missing:
        raise UsageExit(f"incomplete assignment: missing p{', p'.join(map(str, missing))}")
    return values


def cmd_betti(args):
    E = _staircase(args)
    table = betti_mod.betti_numbers(E, _parse_assignment(args.p, E))
    _emit(args, lambda: "\n".join(f"j={j}: beta0={b0} beta1={b1}" for j, (b0, b1) in table.items()),
          {"m": list(E.m), "table": table.to_json()})
    return 0


def cmd_stratum(args):
    E = _staircase(args)
    desc = betti_mod.stratum_descriptor(E, args.j, args.u)

    def text():
        gm = desc.matrix
        tags = {"one": "1", "zero": "0"}
        star = [[tags.get(tag[0], f"p_{{{tag[1]}{tag[2]}}}" if len(tag) > 2 else "?")
                 for tag in row] for row in gm.star_entries]
        lines = [f"j={desc.j} u={desc.u} rank_bound={desc.rank_bound}",
                 f"star rows {list(gm.star_rows)} cols {list(gm.star_cols)}"]
        if star:
            lines.append(_matrix_lines(star))
        conds = desc.condition_strings()
        lines.append("conditions: " + ("; ".join(f"{c} = 0" for c in conds) if conds else "none"))
        return "\n".join(lines)

    _emit(args, text, desc.to_json(), latex_fn=desc.matrix.to_latex)
    return 0


def cmd_gdim(args):
    h = HSeries(args.hseries)
    bella = betti_mod.g_dim(h, "bella")
    brutta = betti_mod.g_dim(h, "brutta")
    _emit(args, lambda: f"bella={bella} brutta={brutta} agree={'true' if bella == brutta else 'false'}",
          {"h": list(h.h), "bella": bella, "brutta": brutta, "agree": bella == brutta})
    return 0


def cmd_generic(args):
    names = default_names(args.n)
    gens = []
    for p in parse_ideal(args.gens, names):
        if len(p.terms) != 1:
            raise UsageExit(f"generators must be monomials, got {p.to_str(names)!r}")
        gens.append(p.lt)
    family, report = generic_cells.cell_report(gens, args.n, args.graded)

    def text():
        lines = [f"initial={report.initial_count} eliminated={len(report.eliminated)} "
                 f"surviving={len(report.survivors)} residual={len(report.residual)}",
                 "survivors: " + (" ".join(report.survivor_names) or "(none)")]
        for eq in report.residual_strings():
            lines.append(f"residual: {eq} = 0")
        lines.append(f"affine_space={'true' if generic_cells.affine_space_check(report) else 'false'}")
        return "\n".join(lines)

    payload = report.to_json(with_log=args.log)
    payload["graded"] = args.graded
    payload["affine_space"] = generic_cells.affine_space_check(report)
    _emit(args, text, payload)
    return 0


def cmd_census(args):
    census = census_mod.cell_census(args.d)

    def text():
        lines = [f"{E}: " + " ".join(f"{k}={v}" for k, v in sorted(dims.items(), key=lambda kv: kv[0].value))
                 for E, dims in census.records]
        lines.append(f"total = {census.total_string()}")
        if args.q is not None:
            lines.append(f"total({args.q}) = {census.evaluate(args.q)}")
            if args.brute_force:
                lines.append(f"brute_force({args.q}) = {census_mod.brute_force_ideal_count(args.d, args.q)}")
        return "\n".join(lines)

    payload = census.to_json()
    if args.q is not None:
        payload["at_q"] = {"q": args.q, "total": census.evaluate(args.q)}
        if args.brute_force:
            payload["at_q"]["brute_force"] = census_mod.brute_force_ideal_count(args.d, args.q)
    _emit(args, text, payload)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="hb-cells",
                                     description="Canonical Hilbert-Burch matrices and Groebner cells of k[x,y].")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, staircase=False, field=False):
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        if staircase:
            p.add_argument("--m", type=_int_list, metavar="M0,M1,...",
                           help="staircase vector m")
            p.add_argument("--d", type=_int_list, metavar="D1,D2,...",
                           help="staircase differences d")
        if field:
            p.add_argument("--field", type=_field_arg, default=QQ,
                           help="coefficient field: q (rationals) or p:<prime>")

    p = sub.add_parser("frame", help="M0(E), degree matrix U(E) and slot set S(E)")
    common(p, staircase=True)
    p.set_defaults(fn=cmd_frame)

    p = sub.add_parser("dims", help="dimensions of the four cells of E")
    common(p, staircase=True)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("minors", help="Groebner basis cut out by a cell matrix")
    common(p, staircase=True, field=True)
    p.add_argument("--cell", help="cell matrix as JSON (schema of canonicalize --format json)")
    p.add_argument("--kind", choices=[k.value for k in hb.CellKind], default="V0",
                   help="random matrix kind when --cell is absent")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_minors)

    p = sub.add_parser("canonicalize", help="staircase and canonical cell matrix of an ideal")
    common(p, field=True)
    p.add_argument("ideal", help="comma-separated polynomials in x, y")
    p.set_defaults(fn=cmd_canonicalize)

    p = sub.add_parser("kinds", help="which cells an ideal belongs to")
    common(p, field=True)
    p.add_argument("ideal", help="comma-separated polynomials in x, y")
    p.set_defaults(fn=cmd_kinds)

    p = sub.add_parser("betti", help="graded Betti numbers at a parameter point")
    common(p, staircase=True)
    p.add_argument("--p", default="zero",
                   help="'zero', 'generic', or assignments p1=...,p2=... over S(E)")
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("stratum", help="determinantal descriptor of a Betti stratum")
    common(p, staircase=True)
    p.add_argument("--j", type=int, required=True, help="degree")
    p.add_argument("--u", type=int, required=True, help="at least u minimal generators")
    p.set_defaults(fn=cmd_stratum)

    p = sub.add_parser("gdim", help="dimension of the graded ideal space, both formulas")
    common(p)
    p.add_argument("--h", dest="hseries", type=_int_list, required=True, metavar="H0,H1,...")
    p.set_defaults(fn=cmd_gdim)

    p = sub.add_parser("generic", help="generic cell equations and linear elimination")
    common(p)
    p.add_argument("--gens", required=True, help="comma-separated monomial generators")
    p.add_argument("--n", type=int, required=True, help="number of variables")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--graded", dest="graded", action="store_true", default=True)
    grp.add_argument("--ungraded", dest="graded", action="store_false")
    p.add_argument("--log", action="store_true", help="include the substitution log in JSON")
    p.set_defaults(fn=cmd_generic)

    p = sub.add_parser("census", help="cell dimensions and point counts at a colength")
    common(p)
    p.add_argument("--d", type=int, required=True, help="colength")
    p.add_argument("--q", type=int, help="evaluate the census total at q")
    p.add_argument("--brute-force", action="store_true",
                   help="also run the exhaustive ideal count over F_q")
    p.set_defaults(fn=cmd_census)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except UsageExit as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
