"""Command-line front end: ``char2forms <subcommand> [options]``.

Exit status is 0 on success, 2 when the mathematics rejects the input (the
message names the reason) and 1 on I/O or parse problems.  Output is JSON
unless ``--out text`` is given.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import canon, contact, liealg, oracle, superalg
from .ff import FieldCtx, FieldError, make_ctx, parse_field
from .mat import FormMatrix, MatrixError, ParseError, is_symmetric, parse_matrix


class CliError(Exception):
    """Domain failure reported with exit status 2."""


# input --------------------------------------------------------------------


def _field(args) -> FieldCtx | None:
    return parse_field(args.field) if args.field else None


def load_matrix(spec: str, ctx: FieldCtx | None) -> FormMatrix:
    """A path to a matrix file, '-' for stdin, or inline rows 'a b; c d' in hex."""
    if spec == "-":
        text = sys.stdin.read()
    elif Path(spec).is_file():
        text = Path(spec).read_text()
    elif re.fullmatch(r"[0-9a-fA-F\s;,]+", spec):
        rows = [r.replace(",", " ").split() for r in spec.split(";") if r.strip()]
        c = ctx or make_ctx(1)
        text = f"{len(rows)} {c.m}\n" + "\n".join(" ".join(r) for r in rows)
    else:
        raise OSError(f"no such matrix file: {spec}")
    b = parse_matrix(text)
    if ctx is not None and b.ctx != ctx:
        raise ParseError(f"matrix is over {b.ctx.name} but --field asks for {ctx.name}")
    return b


def _one_matrix(args, attr: str = "matrix") -> FormMatrix:
    vals = getattr(args, attr)
    if not vals:
        raise ParseError(f"--{attr} is required")
    if isinstance(vals, list):
        if len(vals) != 1:
            raise ParseError(f"exactly one --{attr} expected")
        vals = vals[0]
    return load_matrix(vals, _field(args))


def _sdim(args) -> tuple[int, int]:
    if not args.sdim:
        raise ParseError("--sdim n0,n1 is required")
    try:
        n0, n1 = (int(x) for x in args.sdim.split(","))
    except ValueError as exc:
        raise ParseError(f"bad --sdim {args.sdim!r}") from exc
    return superalg.check_sdim((n0, n1))


# serialization --------------------------------------------------------------


def _algebra_dict(g: liealg.AlgebraBasis) -> dict:
    return {
        "n": g.n,
        "field": g.ctx.name,
        "dim": g.dim,
        "basis": [m.tolist() for m in g.stack()],
    }


def _super_dict(g: superalg.SuperAlgebraBasis) -> dict:
    return {
        "n": g.n,
        "field": g.ctx.name,
        "sdim": list(g.sdim),
        "dim": list(g.dims),
        "basis": {"even": [m.tolist() for m in g.stack("even")], "odd": [m.tolist() for m in g.stack("odd")]},
    }


def _canon_dict(res: canon.CanonResult) -> dict:
    if not res.verify():
        raise CliError("certificate failed re-verification")
    out = {
        "relation": res.relation,
        "label": res.label_dict(),
        "canonical": res.canonical.tolist(),
        "witness_M": res.witness_M.tolist(),
    }
    if res.witness_A is not None:
        out["witness_A"] = res.witness_A.tolist()
    out["verified"] = True
    return out


# algebra shortcuts -------------------------------------------------------------

_LIE = {"oI": liealg.o_I, "oS": liealg.o_S, "oPi": liealg.o_Pi, "gl": liealg.gl, "zd": liealg.zd}
_SUPER = {"ooII": "II", "ooIPi": "IPi", "ooPiI": "PiI", "ooPiPi": "PiPi", "pe": "pe"}


def _split_algebra(name: str) -> tuple[str, int]:
    m = re.fullmatch(r"([A-Za-z]+?)(\d*)", name)
    if not m or (m.group(1) not in _LIE and m.group(1) not in _SUPER):
        raise ParseError(f"unknown algebra {name!r}; choose from {sorted(_LIE) + sorted(_SUPER)} with an optional derived level")
    return m.group(1), int(m.group(2) or 0)


def build_algebra(args):
    """The algebra named by --algebra, or the preserver of --matrix."""
    ctx = _field(args) or make_ctx(1)
    if args.algebra:
        base, level = _split_algebra(args.algebra)
        if base in _LIE:
            if args.n is None:
                raise ParseError("--n is required with a Lie algebra shortcut")
            g = _LIE[base](args.n, ctx)
            return liealg.derived_series(g, level).terms[-1] if level else g
        if base == "pe":
            if args.n is None:
                raise ParseError("--n k is required for pe")
            g = superalg.pe(args.n, ctx)
        else:
            n0, n1 = _sdim(args)
            g = superalg.oo(_SUPER[base], n0, n1, ctx)
        return superalg.super_derived_series(g, level).terms[-1] if level else g
    b = _one_matrix(args)
    if args.sdim:
        return superalg.super_preserver(b, _sdim(args))
    return liealg.preserver(b)


# commands ---------------------------------------------------------------------


def cmd_canon(args) -> dict:
    b = _one_matrix(args)
    if not is_symmetric(b):
        raise CliError("congruence normal forms are provided for symmetric matrices; use socio or albert for the offset relations")
    return _canon_dict(canon.reduce_symmetric(b))


def cmd_equiv(args) -> dict:
    b = _one_matrix(args)
    c = _one_matrix(args, "matrix2")
    if b.shape != c.shape or b.ctx != c.ctx:
        raise CliError("matrices must have equal size and field")
    rel = args.equiv
    out: dict = {"relation": rel}
    if rel == "congruence":
        if is_symmetric(b) and is_symmetric(c):
            res = canon.congruence_equivalence(b, c)
            out["labels"] = [canon.sym_class(b)._asdict(), canon.sym_class(c)._asdict()]
        elif b.ctx.m == 1 and b.n <= oracle.MAX_N:
            out["equivalent"] = oracle.same_orbit(b, c, "congruence")
            out["method"] = "exhaustive orbit"
            out["verified"] = True
            return out
        else:
            raise CliError("congruence of non-symmetric forms is decided exhaustively over GF(2) for n <= 4 only")
    elif rel == "sociological":
        res = canon.offset_equivalence(canon.sociological_canon(b), canon.sociological_canon(c))
        out["labels"] = [{"rank": canon.sociological_rank(b)}, {"rank": canon.sociological_rank(c)}]
    elif rel == "albert":
        out["labels"] = [canon.albert_label(b)._asdict(), canon.albert_label(c)._asdict()]
        out["arf"] = [canon.arf_invariant(b), canon.arf_invariant(c)]
        if not canon.albert_equivalent(b, c):
            res = None
        else:
            res = canon.offset_equivalence(canon.albert_canon(b), canon.albert_canon(c))
    else:
        raise ParseError(f"unknown equivalence {rel!r}")
    out["equivalent"] = res is not None
    if res is not None:
        if not res.verify():
            raise CliError("certificate failed re-verification")
        out["witness_M"] = res.witness_M.tolist()
        if res.witness_A is not None:
            out["witness_A"] = res.witness_A.tolist()
    out["verified"] = True
    return out


def cmd_preserver(args) -> dict:
    g = build_algebra(args)
    return _super_dict(g) if isinstance(g, superalg.SuperAlgebraBasis) else _algebra_dict(g)


def cmd_derived(args) -> dict:
    g = build_algebra(args)
    depth = args.depth
    if isinstance(g, superalg.SuperAlgebraBasis):
        ds = superalg.super_derived_series(g, depth)
        return {"dims": [g.dim, *ds.dims], "sdims": [list(g.dims), *map(list, ds.sdims)], "stable_at": ds.stable_at}
    ds = liealg.derived_series(g, depth)
    return {"dims": [g.dim, *ds.dims], "stable_at": ds.stable_at}


def cmd_center(args) -> dict:
    g = build_algebra(args)
    if isinstance(g, superalg.SuperAlgebraBasis):
        z = superalg.super_center(g)
        mats = g.ctx.matmul(z, g.all_rows()) if z.size else z
        return {"n": g.n, "field": g.ctx.name, "dim": int(z.shape[0]), "basis": [m.reshape(g.n, g.n).tolist() for m in mats]}
    return _algebra_dict(liealg.center(g))


def cmd_simple(args) -> dict:
    g = build_algebra(args)
    if isinstance(g, superalg.SuperAlgebraBasis):
        rep = superalg.super_center_only_ideal(g)
        simple = not rep.proper_ideal_dims and g.dim > 0 and not superalg.super_center(g).shape[0] == g.dim
        return {
            "dim": list(g.dims),
            "simple": bool(simple),
            "method": "exhaustive",
            "proper_ideal_dims": rep.proper_ideal_dims,
            "center_dim": rep.center_dim,
            "center_unique_ideal": rep.unique_nontrivial_ideal,
        }
    res = liealg.is_simple(g, method=args.method)
    out = {"dim": g.dim, "simple": res.simple, "method": res.method}
    if not res.simple:
        rep = liealg.center_only_ideal(g)
        out.update(
            center_dim=rep.center_dim,
            perfect=rep.perfect,
            quotient_simple=rep.quotient_simple,
            center_unique_ideal=rep.unique_nontrivial_ideal,
        )
    return out


def cmd_fingerprint(args) -> dict:
    g = build_algebra(args)
    if isinstance(g, superalg.SuperAlgebraBasis):
        g = superalg.forgetful(g)
    return liealg.fingerprint(g)._asdict()


def cmd_socio(args) -> dict:
    return _canon_dict(canon.sociological_canon(_one_matrix(args)))


def cmd_albert(args) -> dict:
    b = _one_matrix(args)
    try:
        return _canon_dict(canon.albert_canon(b))
    except canon.ArfObstruction as exc:
        raise CliError(f"{exc} (label {canon.albert_label(b)._asdict()})") from exc


def cmd_super_canon(args) -> dict:
    b = _one_matrix(args)
    n0, n1 = _sdim(args)
    par = args.parity or superalg.form_parity(b, (n0, n1))
    if par == "even":
        res = canon.super_even_canon(b, (n0, n1))
    elif par == "odd":
        if n0 != n1:
            raise CliError("a non-degenerate odd form needs n0 = n1")
        if is_symmetric(b):
            res = canon.super_odd_sym_canon(b, n0)
        else:
            res = canon.super_odd_nonsym_canon(b, n0)
    else:
        raise ParseError("--parity must be even or odd")
    out = _canon_dict(res)
    out["sdim"] = [n0, n1]
    out["parity"] = par
    return out


def cmd_super_preserver(args) -> dict:
    if not args.algebra and not args.sdim:
        raise ParseError("--sdim n0,n1 is required")
    g = build_algebra(args)
    if not isinstance(g, superalg.SuperAlgebraBasis):
        raise ParseError("super-preserver needs a super form (--sdim) or a super algebra shortcut")
    out = _super_dict(g)
    if not args.algebra:
        out["parity"] = superalg.form_parity(_one_matrix(args), g.sdim)
    return out


def cmd_super_derived(args) -> dict:
    if not args.algebra and not args.sdim:
        raise ParseError("--sdim n0,n1 is required")
    return cmd_derived(args)


def cmd_contact(args) -> dict:
    b = _one_matrix(args)
    _, _, pars = contact.parse_parities(args.parity or "even", b.n)
    x0 = {"even": 0, "odd": 1}[args.x0]
    spec = contact.OneFormSpec(b, x0, pars)
    out = contact.is_contact(spec).as_dict()
    out["form"] = contact.one_form_text(spec)
    return out


def cmd_census(args) -> dict:
    if args.n is None:
        raise ParseError("--n is required")
    ctx = _field(args)
    if ctx is not None and ctx.m != 1:
        raise CliError("exhaustive census runs over GF(2) only")
    return oracle.enumerate_classes(args.n, args.predicate, args.equiv).as_dict()


def cmd_cluster(args) -> dict:
    if args.matrix:
        reps = [load_matrix(m, _field(args)) for m in args.matrix]
    elif args.n is not None:
        reps = list(oracle.enumerate_classes(args.n, args.predicate, "congruence").representatives)
    else:
        raise ParseError("give matrices with --matrix or a census size with --n")
    if any(r.ctx.m != 1 for r in reps):
        raise CliError("clustering runs over GF(2) only")
    out = oracle.lie_equiv_cluster(reps).as_dict()
    out["matrices"] = [r.tolist() for r in reps]
    return out


COMMANDS = {
    "canon": cmd_canon,
    "equiv": cmd_equiv,
    "preserver": cmd_preserver,
    "derived": cmd_derived,
    "center": cmd_center,
    "simple": cmd_simple,
    "fingerprint": cmd_fingerprint,
    "socio": cmd_socio,
    "albert": cmd_albert,
    "super-canon": cmd_super_canon,
    "super-preserver": cmd_super_preserver,
    "super-derived": cmd_super_derived,
    "contact": cmd_contact,
    "census": cmd_census,
    "cluster": cmd_cluster,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="char2forms", description="Bilinear forms, their Lie (super)algebras and 1-forms over GF(2^m).")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--field", help="gf2_m (default: taken from the matrix file, else gf2_1)")
        s.add_argument("--matrix", action="append", help="matrix file, '-' for stdin, or inline hex rows 'a b; c d'")
        s.add_argument("--matrix2", help="second matrix for equiv")
        s.add_argument("--algebra", help="oI, oS, oPi, gl, zd, ooII, ooIPi, ooPiI, ooPiPi or pe, optionally followed by a derived level")
        s.add_argument("--n", type=int)
        s.add_argument("--sdim", help="superdimension n0,n1")
        s.add_argument("--parity", help="even/odd, or n0,n1 for contact variables")
        s.add_argument("--x0", choices=["even", "odd"], default="even", help="parity of the distinguished variable (contact)")
        s.add_argument("--depth", type=int, default=4)
        s.add_argument("--predicate", default="nondeg-nonsym")
        s.add_argument("--equiv", default="congruence", choices=list(oracle.EQUIVALENCES))
        s.add_argument("--method", default="auto", choices=["auto", "exhaustive", "norton"])
        s.add_argument("--out", default="json", choices=["json", "text"])
    return p


def _text(obj, indent: str = "") -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v)}")
    return "\n".join(lines)


def _default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.bool_):
        return bool(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except (ParseError, FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        CliError,
        MatrixError,
        canon.CanonError,
        liealg.AlgebraError,
        superalg.SuperError,
        contact.ContactError,
        oracle.OracleError,
    ) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.out == "text":
        print(_text(json.loads(json.dumps(result, default=_default))))
    else:
        print(json.dumps(result, default=_default))
    return 0


if __name__ == "__main__":
    sys.exit(main())
