"""Command-line interface.

Exit codes: 0 success, 1 domain failure (e.g. both pair endpoints adjacent),
2 unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import InputError, ParseError, ZknotError
from .gadgets import gadget_catalog, gamma, oriented_bipyramid
from .knotting import knot, summary
from .monodromy import find_pair, find_special_pairs, pair_report, z_monodromy
from .s4 import TABLE_COLUMNS, check_class_table, s4_table
from .surface import load_document, serialize_complex
from .surgery import glue, predicted_merge_count, untouched_zigzags
from .zigzags import (
    MAX_ORIENTATION_PAIRS, TYPE_I, TYPE_II, ZOrientation, edge_types, enumerate_zigzags,
    find_homogeneous_orientations, is_z_homogeneous,
)


class UsageError(InputError):
    pass


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load(path):
    return load_document(_read(path))


def _tau(c, cli_bits, file_bits, required=True):
    k = enumerate_zigzags(c).count
    if cli_bits is not None:
        try:
            tau = ZOrientation.parse(cli_bits)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif file_bits is not None:
        tau = ZOrientation(file_bits)
    else:
        found = find_homogeneous_orientations(c) if c.is_triangulation() else []
        if found:
            return found[0]
        if required:
            raise ZknotError("no z-homogeneous orientation exists; pass --tau")
        return ZOrientation((0,) * k)
    if len(tau) != k:
        raise UsageError(f"orientation has {len(tau)} bits but the complex has {k} zigzag pairs")
    return tau


def _triple(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(parts):
        raise UsageError(f"expected a vertex triple v1,v2,v3, got {text!r}")
    return tuple(parts)


def _emit(obj, as_json, text_lines, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _write_complex(c, tau, path):
    text = serialize_complex(c, tau.bits if tau is not None else None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dot_type_ii(c, tau) -> str:
    typing = edge_types(c, tau)
    lines = ["digraph type_ii {"]
    for v in c.vertices:
        lines.append(f'  "{v}";')
    for e in c.edges:
        if typing.types[e] == TYPE_II:
            t, h = typing.directions[e]
            lines.append(f'  "{t}" -> "{h}" [penwidth=2];')
        else:
            lines.append(f'  "{e[0]}" -> "{e[1]}" [style=dashed, dir=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_info(args):
    c, file_tau = _load(args.file)
    k = enumerate_zigzags(c).count
    report = {
        "V": c.num_vertices, "E": c.num_edges, "F": c.num_faces,
        "euler": c.euler_characteristic(), "orientable": c.is_orientable(),
        "triangulation": c.is_triangulation(), "zigzags": k,
    }
    if c.is_triangulation() and k <= MAX_ORIENTATION_PAIRS:
        report["homogeneous_orientations"] = [str(t) for t in find_homogeneous_orientations(c)]
    else:
        report["homogeneous_orientations"] = None
    if args.dot:
        sys.stdout.write(dot_type_ii(c, _tau(c, args.tau, file_tau)))
        return 0
    hom = report["homogeneous_orientations"]
    _emit(report, args.json, [
        f"V={report['V']} E={report['E']} F={report['F']}",
        f"euler characteristic: {report['euler']}",
        f"orientable: {'yes' if report['orientable'] else 'no'}",
        f"zigzags: {k}",
        "homogeneous orientations: " + ("skipped" if hom is None else f"({len(hom)}) {' '.join(hom)}".rstrip()),
    ])
    return 0


def cmd_zigzags(args):
    c, file_tau = _load(args.file)
    tau = _tau(c, args.tau, file_tau, required=False)
    if args.dot:
        sys.stdout.write(dot_type_ii(c, tau))
        return 0
    zs = enumerate_zigzags(c).representatives(tau)
    typing = edge_types(c, tau)
    hom = is_z_homogeneous(c, tau)
    report = {
        "tau": str(tau),
        "zigzags": [
            {"length": len(z), "vertices": list(z.vertices),
             "states": [[list(e), list(f)] for e, f in z.states]}
            for z in zs
        ],
        "type_I": typing.count(TYPE_I),
        "type_II": typing.count(TYPE_II),
        "type_II_edges": [list(d) for d in typing.type_ii()],
        "homogeneous": hom,
    }
    lines = [f"tau {tau}"]
    for i, z in enumerate(zs, 1):
        lines.append(f"zigzag {i} (length {len(z)}): {' '.join(z.vertices)}")
    lines.append(f"type I edges: {report['type_I']}, type II edges: {report['type_II']}, "
                 f"homogeneous: {'yes' if hom else 'no'}")
    _emit(report, args.json, lines)
    return 0


def cmd_pairs(args):
    c, file_tau = _load(args.file)
    tau = _tau(c, args.tau, file_tau)
    if not is_z_homogeneous(c, tau):
        raise ZknotError(f"orientation {tau} is not z-homogeneous")
    reports = [pair_report(c, tau, p) for p in find_special_pairs(c, tau)]
    lines = [f"tau {tau}  (+ side: faces following e1 in the rotation at v2)",
             f"{'pair':<24} {'M_P':<10} {'class':<6} {'k':>2}  essential"]
    for r in reports:
        lines.append(f"{str(r.pair):<24} {str(r.monodromy):<10} {r.class_id:<6} {r.through:>2}  "
                     f"{'yes' if r.essential else 'no'}")
    _emit({"tau": str(tau), "pairs": [r.as_dict() for r in reports]}, args.json, lines)
    return 0


def cmd_gen(args):
    if args.family == "bipyramid":
        if len(args.params) != 1:
            raise UsageError("gen bipyramid takes one argument N")
        c, tau = oriented_bipyramid(args.params[0])
    else:
        if len(args.params) != 4:
            raise UsageError("gen gamma takes four arguments P1 P2 P3 P4")
        c, tau = gamma(*args.params)
    _write_complex(c, tau, args.output)
    return 0


def cmd_sum(args):
    ca, fta = _load(args.file_a)
    cb, ftb = _load(args.file_b)
    ta = _tau(ca, args.tau_a, fta)
    tb = _tau(cb, args.tau_b, ftb)
    pa = find_pair(ca, ta, _triple(args.pair_a))
    pb = find_pair(cb, tb, _triple(args.pair_b))
    g = "swap" if args.swap else "direct"
    ma, mb = z_monodromy(ca, ta, pa), z_monodromy(cb, tb, pb)
    r = glue(ca, ta, pa, cb, tb, pb, g)
    predicted = predicted_merge_count(ma, mb, g)
    actual = r.zigzags_through_glued()
    report = {
        "g": g, "monodromy_a": str(ma), "monodromy_b": str(mb),
        "predicted_through_glued": predicted, "actual_through_glued": actual,
        "zigzags": enumerate_zigzags(r.complex).count,
        "expected_zigzags": untouched_zigzags(ca, ta, pa) + untouched_zigzags(cb, tb, pb) + predicted,
        "euler": r.complex.euler_characteristic(), "tau": str(r.tau),
    }
    _write_complex(r.complex, r.tau, args.output)
    out = sys.stdout if args.output else sys.stderr
    _emit(report, args.json, [
        f"g={g}  M_P={ma}  M_P'={mb}",
        f"zigzags through glued edges: predicted {predicted}, actual {actual}",
        f"zigzags in sum: {report['zigzags']} (euler {report['euler']})",
    ], out)
    return 0 if predicted == actual else 1


def cmd_knot(args):
    c, file_tau = _load(args.file)
    tau = _tau(c, args.tau, file_tau)
    c2, tau2, trace = knot(c, tau)
    _write_complex(c2, tau2, args.output)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(trace.to_json())
    out = sys.stdout if args.output else sys.stderr
    lines = [f"{len(trace.steps)} gluing step(s)"]
    for i, s in enumerate(trace.steps, 1):
        lines.append(f"  {i}: pair {','.join(s.pair)} M_P={s.monodromy} ({s.class_id}) + {s.gadget} "
                     f"[{s.g}, {s.gadget_tau}]  zigzags {s.before} -> {s.after}")
    f = trace.final
    lines.append(f"final: V={f['V']} E={f['E']} F={f['F']} euler={f['euler']} zigzags={f['zigzags']}")
    _emit(trace.as_dict(), args.json, lines, out)
    return 0


def cmd_s4table(args):
    rows = s4_table()
    if args.check:
        problems = check_class_table()
        for p in problems:
            print(f"MISMATCH {p}", file=sys.stderr)
        if problems:
            return 1
    if args.json:
        _emit([dict(zip(TABLE_COLUMNS, map(str, r))) for r in rows], True, [])
    else:
        lines = [" ".join(f"{h:<10}" for h in TABLE_COLUMNS).rstrip()]
        lines += [" ".join(f"{str(p):<10}" for p in r).rstrip() for r in rows]
        _emit(None, False, lines)
    if args.check:
        print(f"checked {len(rows)} rows: class closure and zigzag counts ok", file=sys.stderr)
    return 0


def cmd_catalog(args):
    rows = []
    for g in gadget_catalog():
        c = g.complex
        rows.append({"name": g.name, "pair": list(g.pair.triple), "class": g.class_id,
                     "monodromy": str(g.monodromy), "V": c.num_vertices, "E": c.num_edges,
                     "F": c.num_faces, "zigzags": enumerate_zigzags(c).count, "tau": str(g.tau)})
    lines = [f"{'gadget':<20} {'class':<6} {'M_P':<10} {'V':>3} {'E':>3} {'F':>3} zigzags"]
    lines += [f"{r['name']:<20} {r['class']:<6} {r['monodromy']:<10} {r['V']:>3} {r['E']:>3} "
              f"{r['F']:>3} {r['zigzags']}" for r in rows]
    _emit(rows, args.json, lines)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="zknot", description="Zigzag analysis of triangulated surfaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, tau=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if tau:
            sp.add_argument("--tau", metavar="BITS", help="z-orientation as a 0/1 string")

    sp = sub.add_parser("info", help="counts, topology and homogeneous orientations")
    sp.add_argument("file")
    sp.add_argument("--dot", action="store_true", help="print the type-II subgraph as DOT")
    common(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("zigzags", help="list zigzags and the edge typing")
    sp.add_argument("file")
    sp.add_argument("--dot", action="store_true", help="print the type-II subgraph as DOT")
    common(sp)
    sp.set_defaults(func=cmd_zigzags)

    sp = sub.add_parser("pairs", help="special pairs with their monodromy")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_pairs)

    sp = sub.add_parser("gen", help="generate a bipyramid or four-path triangulation")
    sp.add_argument("family", choices=("bipyramid", "gamma"))
    sp.add_argument("params", type=int, nargs="+")
    sp.add_argument("-o", "--output")
    sp.add_argument("--json", action="store_true", help="accepted for uniformity; output is always JSON")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sum", help="connected sum along two special pairs")
    sp.add_argument("file_a")
    sp.add_argument("pair_a")
    sp.add_argument("file_b")
    sp.add_argument("pair_b")
    sp.add_argument("--swap", action="store_true", help="use the swapping special homeomorphism")
    sp.add_argument("--tauA", dest="tau_a", metavar="BITS")
    sp.add_argument("--tauB", dest="tau_b", metavar="BITS")
    sp.add_argument("-o", "--output")
    common(sp, tau=False)
    sp.set_defaults(func=cmd_sum)

    sp = sub.add_parser("knot", help="glue gadgets until the triangulation is z-knotted")
    sp.add_argument("file")
    sp.add_argument("--trace", metavar="PATH")
    sp.add_argument("-o", "--output")
    common(sp)
    sp.set_defaults(func=cmd_knot)

    sp = sub.add_parser("s4table", help="print the S4 monodromy table")
    sp.add_argument("--check", action="store_true")
    common(sp, tau=False)
    sp.set_defaults(func=cmd_s4table)

    sp = sub.add_parser("catalog", help="print the verified gadget catalog")
    common(sp, tau=False)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ZknotError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
