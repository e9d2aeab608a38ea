"""Batch command line front end.

One verb per invocation, all inputs and outputs in the text formats of
fileio.  Exit codes: 0 success, 1 mathematical/validation failure with
the violations printed, 2 usage error (argparse).  Output is
deterministic byte for byte: artifact files have fixed names inside
--out, and everything printed is derived from sorted structures.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import fileio
from .algebra import (
    Context,
    EquivContext,
    EquivariantElement,
    convolve,
    disjoint_decomposition,
    graded_components,
    involute,
    psi,
)
from .catalog import CATALOG, emit_fixtures
from .cocycle import (
    check_cohomologous,
    invert_cocycle,
    trivial_cocycle,
    validate_cocycle,
    validate_grading,
)
from .groupoid import is_effective, is_minimal, orbits, validate_groupoid
from .rings import parse_involution, parse_ring, unit_subgroup
from .structure import Ideal, ck_witness, graded_ck_witness, ideal_generated, is_simple
from .twist import build_twist, find_section, induced_cocycle, twists_isomorphic, validate_twist

_AUTO_INVOLUTION = {"Z": "id", "Q": "id", "GF": "id", "GF2": "frobenius", "CYC": "conj"}


def _involution(args, ring):
    name = getattr(args, "involution", "none")
    if name == "none":
        return None
    if name == "auto":
        name = _AUTO_INVOLUTION[ring.kind[0]]
    return parse_involution(ring, name)


def _context(args, gpd=None):
    """Assemble the algebra context from --ring/--cocycle/--groupoid and
    an optional positional groupoid (cross-checked against the cocycle)."""
    ring = parse_ring(args.ring)
    coc_path = getattr(args, "cocycle", None)
    gpd_path = getattr(args, "groupoid", None)
    if gpd is None and gpd_path:
        gpd = fileio.read_groupoid(gpd_path)
    if coc_path:
        coc = fileio.read_cocycle(coc_path)
        if gpd is not None and coc.gpd != gpd:
            raise ValueError("cocycle file describes a different groupoid")
        g = coc.gpd
    else:
        if gpd is None:
            raise ValueError("need a groupoid file or --cocycle/--groupoid")
        g = gpd
        coc = trivial_cocycle(g, 1)
    tgrp = unit_subgroup(ring, coc.n)
    return Context(g, ring, tgrp, coc, _involution(args, ring))


def _artifact(args, fname: str, lines) -> None:
    text = "\n".join(lines) + "\n"
    out = getattr(args, "out", None)
    if out:
        os.makedirs(out, exist_ok=True)
        fileio.write_text(os.path.join(out, fname), text)
        print("wrote %s" % fname)
    else:
        sys.stdout.write(text)


def _bool(x) -> str:
    return "true" if x else "false"


# --- verb handlers ------------------------------------------------------------

def _cmd_validate(args) -> int:
    if args.what == "groupoid":
        bad = validate_groupoid(fileio.read_groupoid(args.file))
    elif args.what == "cocycle":
        coc = fileio.read_cocycle(args.file)
        bad = validate_groupoid(coc.gpd) or validate_cocycle(coc)
    elif args.what == "twist":
        bad = validate_twist(fileio.read_twist(args.file))
    else:
        grading = fileio.read_grading(args.file)
        bad = validate_groupoid(grading.gpd) or validate_grading(grading)
    if bad:
        for v in bad:
            print("violation: %s" % v)
        return 1
    print("ok")
    return 0


def _cmd_orbits(args) -> int:
    g = fileio.read_groupoid(args.file)
    for i, orb in enumerate(orbits(g)):
        print("orbit %d: %s" % (i, " ".join(str(u) for u in orb)))
    return 0


def _cmd_effective(args) -> int:
    print("effective: %s" % _bool(is_effective(fileio.read_groupoid(args.file))))
    return 0


def _cmd_minimal(args) -> int:
    print("minimal: %s" % _bool(is_minimal(fileio.read_groupoid(args.file))))
    return 0


def _cmd_mul(args) -> int:
    ctx = _context(args)
    f = fileio.read_element(args.left, ctx)
    g = fileio.read_element(args.right, ctx)
    _artifact(args, "product.elt", fileio.serialize_element(convolve(f, g)))
    return 0


def _cmd_star(args) -> int:
    ctx = _context(args)
    f = fileio.read_element(args.file, ctx)
    _artifact(args, "star.elt", fileio.serialize_element(involute(f)))
    return 0


def _cmd_decompose(args) -> int:
    ctx = _context(args)
    f = fileio.read_element(args.file, ctx)
    parts = disjoint_decomposition(f)
    print("parts: %d" % len(parts))
    _artifact(args, "parts.dec", fileio.serialize_decomposition(ctx.ring, parts))
    return 0


def _cmd_cohomologous(args) -> int:
    target = fileio.read_cocycle(args.target)
    base = fileio.read_cocycle(args.base)
    b = check_cohomologous(target, base, method=args.method, cap=args.cap)
    print("cohomologous: %s" % _bool(b is not None))
    _artifact(args, "coboundary.cob", fileio.serialize_coboundary(target.n, target.gpd.m, b))
    return 0


def _cmd_twist(args) -> int:
    if args.what == "build":
        g = fileio.read_groupoid(args.file)
        coc = fileio.read_cocycle(args.cocfile)
        if coc.gpd != g:
            raise ValueError("cocycle file describes a different groupoid")
        tw = build_twist(g, coc)
        _artifact(args, "twist.twi", fileio.serialize_twist(tw))
        return 0
    if args.what == "iso":
        t1 = fileio.read_twist(args.file)
        t2 = fileio.read_twist(args.second)
        mor = twists_isomorphic(t1, t2)
        print("isomorphic: %s" % _bool(mor is not None))
        _artifact(args, "morphism.mor", fileio.serialize_morphism(None if mor is None else mor.mapping))
        return 0
    tw = fileio.read_twist(args.file)
    sec = find_section(tw)
    if args.what == "section":
        _artifact(args, "section.sec", fileio.serialize_section(sec))
        return 0
    # induced
    _artifact(args, "induced.coc", fileio.serialize_cocycle(induced_cocycle(tw, sec)))
    return 0


def _cmd_psi(args) -> int:
    tw = fileio.read_twist(args.file)
    ring = parse_ring(args.ring)
    tgrp = unit_subgroup(ring, tw.n)
    conj = _involution(args, ring)
    sec = find_section(tw)
    ectx = EquivContext(tw, sec, ring, tgrp, conj)
    ctx = Context(tw.base, ring, tgrp, invert_cocycle(induced_cocycle(tw, sec)), conj)
    h = fileio.read_element(args.elt, ctx)
    out = psi(EquivariantElement(ectx, h.coeffs), ctx)
    _artifact(args, "psi.elt", fileio.serialize_element(out))
    return 0


def _cmd_grade(args) -> int:
    grading = fileio.read_grading(args.file)
    bad = validate_groupoid(grading.gpd) or validate_grading(grading)
    if bad:
        for v in bad:
            print("violation: %s" % v)
        return 1
    ctx = _context(args, gpd=grading.gpd)
    f = fileio.read_element(args.elt, ctx)
    comps = graded_components(f, grading)
    print("components: %d" % len(comps))
    for label in sorted(comps):
        _artifact(args, "component_%d.elt" % label, fileio.serialize_element(comps[label]))
    return 0


def _cmd_ideal(args) -> int:
    g = fileio.read_groupoid(args.file)
    ctx = _context(args, gpd=g)
    if args.what == "gen":
        gens = [fileio.read_element(p, ctx) for p in args.elts]
        ideal = ideal_generated(ctx, gens)
        print("dim: %d" % ideal.dim)
        _artifact(args, "ideal.idl", fileio.serialize_ideal(ideal))
        return 0
    ideal = fileio.read_ideal(args.idl, ctx)
    f = fileio.read_element(args.elt, ctx)
    print("member: %s" % _bool(ideal.member(f)))
    return 0


def _cmd_ck_witness(args) -> int:
    g = fileio.read_groupoid(args.file)
    ctx = _context(args, gpd=g)
    ideal = fileio.read_ideal(args.idl, ctx)
    w = ck_witness(ctx, ideal)
    print("witness: %s" % " ".join(str(u) for u in sorted(w)))
    return 0


def _cmd_graded_witness(args) -> int:
    grading = fileio.read_grading(args.file)
    ctx = _context(args, gpd=grading.gpd)
    ideal = fileio.read_ideal(args.idl, ctx)
    w = graded_ck_witness(ctx, grading, ideal)
    print("witness: %s" % " ".join(str(u) for u in sorted(w)))
    return 0


def _cmd_simple(args) -> int:
    g = fileio.read_groupoid(args.file)
    ctx = _context(args, gpd=g)
    res = is_simple(ctx, mode=args.mode, cap=args.cap)
    verdict = "unknown" if res.simple is None else _bool(res.simple)
    print("simple: %s" % verdict)
    print("reason: %s" % res.reason)
    if isinstance(res.certificate, Ideal):
        _artifact(args, "certificate.idl", fileio.serialize_ideal(res.certificate))
    elif res.certificate is not None:
        _artifact(args, "certificate.elt", fileio.serialize_element(res.certificate))
    return 0


def _cmd_catalog(args) -> int:
    if args.what == "list":
        for entry in CATALOG.values():
            print("%-12s %s" % (entry.name, entry.summary))
        return 0
    written = emit_fixtures(args.out or ".", args.name)
    for fname in written:
        print("wrote %s" % fname)
    return 0


# --- parser -------------------------------------------------------------------

def _add_ring(p, involution_default="none"):
    p.add_argument("--ring", default="Q", help="coefficient ring: Z, Q, GF(p), GF(p^2), Q(zeta_n)")
    p.add_argument(
        "--involution",
        default=involution_default,
        choices=["none", "auto", "id", "conj", "frobenius"],
        help="ring involution (auto picks by ring kind)",
    )


def _add_ctx(p, involution_default="none"):
    _add_ring(p, involution_default)
    p.add_argument("--cocycle", help="cocycle file fixing the twist (default: untwisted)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twistalg",
        description="exact twisted convolution algebras over finite discrete groupoids",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check an object file against its axioms")
    p.add_argument("what", choices=["groupoid", "cocycle", "twist", "grading"])
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    for name, fn in (("orbits", _cmd_orbits), ("effective", _cmd_effective), ("minimal", _cmd_minimal)):
        p = sub.add_parser(name, help="unit-space %s query" % name)
        p.add_argument("file", help="groupoid file")
        p.set_defaults(fn=fn)

    p = sub.add_parser("mul", help="twisted convolution of two element files")
    _add_ctx(p)
    p.add_argument("--groupoid", help="groupoid file when no cocycle is given")
    p.add_argument("--out")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_mul)

    p = sub.add_parser("star", help="involution of an element file")
    _add_ctx(p, involution_default="auto")
    p.add_argument("--groupoid")
    p.add_argument("--out")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_star)

    p = sub.add_parser("decompose", help="split an element along disjoint bisections")
    _add_ctx(p)
    p.add_argument("--groupoid")
    p.add_argument("--out")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("cohomologous", help="solve target = base * coboundary")
    p.add_argument("--method", default="solve", choices=["solve", "brute"])
    p.add_argument("--cap", type=int, default=200000)
    p.add_argument("--out")
    p.add_argument("target")
    p.add_argument("base")
    p.set_defaults(fn=_cmd_cohomologous)

    p = sub.add_parser("twist", help="central extension commands")
    p.add_argument("what", choices=["build", "iso", "section", "induced"])
    p.add_argument("file", help="groupoid file for build, twist file otherwise")
    p.add_argument("cocfile", nargs="?", help="cocycle file (build)")
    p.add_argument("second", nargs="?", help="second twist file (iso)")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_twist)

    p = sub.add_parser("psi", help="equivariant-function picture of an element")
    _add_ring(p)
    p.add_argument("--out")
    p.add_argument("file", help="twist file")
    p.add_argument("elt", help="element file over the base")
    p.set_defaults(fn=_cmd_psi)

    p = sub.add_parser("grade", help="split an element into homogeneous components")
    _add_ctx(p)
    p.add_argument("--out")
    p.add_argument("file", help="grading file")
    p.add_argument("elt")
    p.set_defaults(fn=_cmd_grade)

    p = sub.add_parser("ideal", help="two-sided ideal commands")
    p.add_argument("what", choices=["gen", "member"])
    p.add_argument("file", help="groupoid file")
    _add_ctx(p)
    p.add_argument("--out")
    p.add_argument("idl", nargs="?", help="ideal file (member)")
    p.add_argument("elt", nargs="?", help="element file (member)")
    p.add_argument("elts", nargs="*", help="generator element files (gen)")
    p.set_defaults(fn=_cmd_ideal)

    p = sub.add_parser("ck-witness", help="unit-set witness inside a nonzero ideal")
    _add_ctx(p)
    p.add_argument("file", help="groupoid file")
    p.add_argument("idl", help="ideal file")
    p.set_defaults(fn=_cmd_ck_witness)

    p = sub.add_parser("graded-witness", help="witness for a graded ideal")
    _add_ctx(p)
    p.add_argument("file", help="grading file")
    p.add_argument("idl", help="ideal file")
    p.set_defaults(fn=_cmd_graded_witness)

    p = sub.add_parser("simple", help="simplicity of the twisted algebra")
    _add_ctx(p)
    p.add_argument("--mode", default="structural", choices=["structural", "exhaustive"])
    p.add_argument("--cap", type=int, default=2 ** 20)
    p.add_argument("--out")
    p.add_argument("file", help="groupoid file")
    p.set_defaults(fn=_cmd_simple)

    p = sub.add_parser("catalog", help="stock groupoids and fixtures")
    p.add_argument("what", choices=["list", "emit"])
    p.add_argument("name", nargs="?", default="all", help="catalog name or 'all' (emit)")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_catalog)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verb == "ideal" and args.what == "gen":
        # positionals after the groupoid are all generators in gen mode
        gens = [x for x in (args.idl, args.elt) if x] + list(args.elts)
        if not gens:
            print("error: ideal gen needs at least one element file", file=sys.stderr)
            return 2
        args.elts = gens
    if args.verb == "ideal" and args.what == "member" and (not args.idl or not args.elt):
        print("error: ideal member needs an ideal file and an element file", file=sys.stderr)
        return 2
    if args.verb == "twist":
        if args.what == "build" and not args.cocfile:
            print("error: twist build needs a groupoid file and a cocycle file", file=sys.stderr)
            return 2
        if args.what == "iso":
            args.second = args.second or args.cocfile
            if not args.second:
                print("error: twist iso needs two twist files", file=sys.stderr)
                return 2
    try:
        return args.fn(args)
    except (ValueError, KeyError, IndexError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
