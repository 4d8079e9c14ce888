"""Command line interface.

Every subcommand prints human-readable text, or JSON with ``--json``.
Exit status: 0 on success (including a "not smooth" verdict), 1 when the
computation rejects its input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chargroups, chowcalc, covers, picard
from .errors import DomainError
from .exactcore import QQ, parse_field
from .forms import parse_form, parse_poly


def _read_form(path: str, field):
    return parse_form(Path(path).read_text(), field)


def _field_arg(args):
    return parse_field(getattr(args, "field", None))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _picard_text(res: picard.PicardResult) -> str:
    order = res.order if res.order is not None else "infinite"
    lines = [f"Picard group: {res.presentation.describe()}", f"order: {order}"]
    prov = res.provenance
    if res.kind == "triple":
        lines.append(f"relations (v-basis): {prov['rows_v']}")
        lines.append(f"printed relations match: {prov['paper_closed_form_match']}")
    else:
        lines.append(f"deg(Delta): {prov['deg_delta']}")
    return "\n".join(lines)


# --- handlers ---------------------------------------------------------------

def cmd_picard_uniform(args):
    res = picard.picard_uniform(args.n, args.r, args.d)
    _emit(args, res.to_json(), _picard_text(res))


def cmd_picard_triple(args):
    res = picard.triple_picard(args.d1, args.d2, allow_swap=args.swap)
    _emit(args, res.to_json(), _picard_text(res))


def cmd_picard_hyperelliptic(args):
    res = picard.hyperelliptic_picard(args.g)
    _emit(args, res.to_json(), _picard_text(res))


def cmd_disc_degree(args):
    deg = chowcalc.discriminant_degree(args.n, args.m)
    _emit(args, {"n": args.n, "m": args.m, "degree": deg}, str(deg))


def cmd_z_bidegree(args):
    a = chowcalc.z_bidegree(args.d1, args.d2)
    _emit(args, {"d1": args.d1, "d2": args.d2, "bidegree": list(a)}, f"({a[0]}, {a[1]})")


def cmd_char_lattice(args):
    L = chargroups.gamma_lattice(args.d1, args.d2)
    payload = {
        "d1": L.d1,
        "d2": L.d2,
        "parity_case": L.parity_case,
        "v1": list(L.v1.coords),
        "v2": list(L.v2.coords),
        "index": L.index(),
    }
    text = (f"v1 = {L.v1.coords[0]} e1 + {L.v1.coords[1]} e2\n"
            f"v2 = {L.v2.coords[0]} e1 + {L.v2.coords[1]} e2\n"
            f"index in Z^2: {L.index()} ({L.parity_case})")
    _emit(args, payload, text)


def cmd_char_index(args):
    k = chargroups.uniform_char_index(args.n, args.d)
    _emit(args, {"n": args.n, "d": args.d, "index": k}, str(k))


def cmd_char_cone(args):
    ce = chargroups.cone_class_e(args.a1, args.a2, args.d1, args.d2)
    L = chargroups.gamma_lattice(args.d1, args.d2)
    cv = chargroups.to_v_basis(ce, L)
    payload = {"e": list(ce.coords), "v": list(cv.coords)}
    _emit(args, payload, f"e-basis: {ce.coords}\nv-basis: {cv.coords}")


def cmd_char_isom(args):
    rep = chargroups.isom_check(args.n, args.d, args.samples, _field_arg(args), args.seed)
    payload = {"n": rep.n, "d": rep.d, "case": rep.case, "q": rep.q, "passed": rep.passed,
               "checks": rep.checks, "witness": rep.witness}
    _emit(args, payload, f"case d = {rep.case} mod n+1, q = {rep.q}: "
                         f"{'pass' if rep.passed else 'FAIL'} {rep.checks}")


def cmd_smooth_uniform(args):
    F = _read_form(args.form, _field_arg(args) if args.field else None)
    if F.degree % args.r:
        raise DomainError(f"form degree {F.degree} is not divisible by r = {args.r}")
    spec = covers.UniformCoverSpec(F.nvars - 1, args.r, F.degree // args.r, F)
    v = covers.is_smooth_uniform(spec, args.ext_bound, args.budget)
    _emit(args, v.to_json(), f"smooth: {v.smooth} ({v.strength}: {v.reason})")


def _read_pair(args):
    fld = _field_arg(args) if args.field else None
    f1 = _read_form(args.forms[0], fld)
    f2 = _read_form(args.forms[1], fld if fld is not None else None)
    if f1.field is not f2.field:
        if f1.field is QQ:
            f1 = f1.reduce_mod(f2.field)
        elif f2.field is QQ:
            f2 = f2.reduce_mod(f1.field)
    return f1, f2


def cmd_smooth_triple(args):
    f1, f2 = _read_pair(args)
    spec = covers.TripleCoverSpec.from_forms(f1, f2)
    v = covers.is_smooth_triple(spec)
    payload = dict(v.to_json(), d1=spec.d1, d2=spec.d2)
    _emit(args, payload, f"smooth: {v.smooth} ({v.strength}: {v.reason})")


def _algebra_text(alg, audit) -> str:
    lines = [f"{alg.kind} algebra of rank {alg.rank}, basis {', '.join(alg.labels)}"]
    for (i, j), vec in sorted(alg.table.items()):
        if i <= j:
            terms = [f"({p!r})*{alg.labels[k]}" for k, p in enumerate(vec) if not p.is_zero()]
            lines.append(f"  {alg.labels[i]}*{alg.labels[j]} = {' + '.join(terms) or '0'}")
    lines.append(f"graded: {alg.grading_ok()}  associative: {audit.passed}")
    return "\n".join(lines)


def cmd_cover_uniform(args):
    F = _read_form(args.form, _field_arg(args) if args.field else None)
    if F.degree % args.r:
        raise DomainError(f"form degree {F.degree} is not divisible by r = {args.r}")
    spec = covers.UniformCoverSpec(F.nvars - 1, args.r, F.degree // args.r, F)
    alg = covers.build_uniform_algebra(spec)
    audit = alg.audit()
    payload = dict(alg.to_json(), graded=alg.grading_ok(), audit=audit.to_json(alg.labels))
    _emit(args, payload, _algebra_text(alg, audit))


def cmd_cover_triple(args):
    f1, f2 = _read_pair(args)
    h = None
    if args.h:
        h = parse_poly(Path(args.h).read_text(), f1.field, nvars=2)
    alg, audit = covers.build_triple_algebra(f1, f2, h)
    payload = dict(alg.to_json(), graded=alg.grading_ok(), audit=audit.to_json(alg.labels))
    _emit(args, payload, _algebra_text(alg, audit))


def cmd_gen_witness(args):
    fld = _field_arg(args)
    if args.a:
        F, point = covers.generate_singular_witness(args.n, args.m, fld, [int(x) for x in args.a])
        search = parse_field(args.search_field) if fld is QQ else None
        rep = covers.verify_witness(F, point, [fld(int(x)) for x in args.a], args.ext_bound,
                                    search, args.budget)
    else:
        rep = covers.find_singular_witness(args.n, args.m, fld, args.seed, args.ext_bound,
                                           args.max_tries, args.budget)
    text = (f"{rep.F.to_text()}"
            f"expected singular point: ({':'.join(fld.format(c) for c in rep.point)})\n"
            f"partials vanish: {rep.partials_vanish}  linear rank: {rep.linear_rank}  "
            f"only singular point: {rep.only_expected}  tries: {rep.tries}")
    _emit(args, rep.to_json(), text)


def cmd_dim_uniform(args):
    k = picard.stack_dimension("uniform", n=args.n, r=args.r, d=args.d)
    _emit(args, {"kind": "uniform", "params": {"n": args.n, "r": args.r, "d": args.d},
                 "dimension": k}, str(k))


def cmd_dim_triple(args):
    k = picard.stack_dimension("triple", d1=args.d1, d2=args.d2)
    _emit(args, {"kind": "triple", "params": {"d1": args.d1, "d2": args.d2},
                 "dimension": k}, str(k))


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def leaf(sub, name, handler, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    def group(sub, name, help=None):
        p = sub.add_parser(name, help=help)
        s = p.add_subparsers(dest=f"{name}_cmd", required=True)
        return s

    parser = argparse.ArgumentParser(prog="cycov", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pic = group(sub, "picard", "Picard groups of stacks of smooth covers")
    p = leaf(pic, "uniform", cmd_picard_uniform)
    for a in ("--n", "--r", "--d"):
        p.add_argument(a, type=int, required=True)
    p = leaf(pic, "triple", cmd_picard_triple)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--swap", action="store_true",
                   help="compute (d1 even, d2 odd) through the isomorphic stack (d2, d1)")
    p = leaf(pic, "hyperelliptic", cmd_picard_hyperelliptic)
    p.add_argument("--g", type=int, required=True)

    p = leaf(sub, "disc-degree", cmd_disc_degree, "degree of the discriminant hypersurface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = leaf(sub, "z-bidegree", cmd_z_bidegree, "bidegree of the common-zero locus")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)

    ch = group(sub, "char", "character lattices")
    p = leaf(ch, "lattice", cmd_char_lattice)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p = leaf(ch, "index", cmd_char_index)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = leaf(ch, "cone", cmd_char_cone)
    for a in ("--a1", "--a2", "--d1", "--d2"):
        p.add_argument(a, type=int, required=True)
    p = leaf(ch, "isom", cmd_char_isom)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--field", default=None, help="p or p^k (default QQ)")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    sm = group(sub, "smooth", "smoothness verdicts")
    p = leaf(sm, "uniform", cmd_smooth_uniform)
    p.add_argument("--form", required=True, help="branch form file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--field", default=None)
    p.add_argument("--ext-bound", type=int, default=1)
    p.add_argument("--budget", type=int, default=covers.DEFAULT_BUDGET)
    p = leaf(sm, "triple", cmd_smooth_triple)
    p.add_argument("--forms", nargs=2, required=True, metavar=("F1", "F2"))
    p.add_argument("--field", default=None)

    cov = group(sub, "cover", "cover algebras")
    alg = cov.add_parser("algebra").add_subparsers(dest="algebra_cmd", required=True)
    p = leaf(alg, "uniform", cmd_cover_uniform)
    p.add_argument("--form", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--field", default=None)
    p = leaf(alg, "triple", cmd_cover_triple)
    p.add_argument("--forms", nargs=2, required=True, metavar=("F1", "F2"))
    p.add_argument("--h", default=None, help="override t1*t2 (polynomial file)")
    p.add_argument("--field", default=None)

    gen = group(sub, "gen", "generators")
    p = leaf(gen, "witness", cmd_gen_witness)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--a", nargs="+", default=None, help="coefficients a_i (random if omitted)")
    p.add_argument("--search-field", default="101", help="prime for the search when --field QQ")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ext-bound", type=int, default=2)
    p.add_argument("--max-tries", type=int, default=20)
    p.add_argument("--budget", type=int, default=covers.DEFAULT_BUDGET)

    dim = group(sub, "dim", "stack dimensions")
    p = leaf(dim, "uniform", cmd_dim_uniform)
    for a in ("--n", "--r", "--d"):
        p.add_argument(a, type=int, required=True)
    p = leaf(dim, "triple", cmd_dim_triple)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
