"""``sphroot`` command line.

Spec files are JSON documents ``{"version", "kind", "payload", "options"}``.
Rationals are written as strings ``"p/q"`` (plain integers are accepted on
input), vectors as arrays, and the point at infinity as ``"inf"``.

Exit codes: 0 success, 1 invalid data, 2 unreadable or malformed input,
3 inconclusive check (reserved; every check implemented here is exact).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .cone_roots import RootDescription, StructuralError
from .engine import DEFAULT_PRESERVATION_BOUND, certify, demazure_roots
from .lattice import Cone, LatticeError
from .symbolic import INF
from .type1 import (CATALOG, MINUS, SIDES, ColoredCone, HomogData, SphericalDataI, ValidationError,
                    catalog_homogeneous, color_table, colored_cone, from_colored_cone, validate_type1)
from .type2 import NotSemisimpleRoot, colored_cone_type2, from_colored_cone_type2, validate_type2

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class SpecError(ValueError):
    """Malformed spec document."""


# ---------------------------------------------------------------------------
# encoding

def enc_q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def enc_vec(v: Sequence) -> list[str]:
    return [enc_q(x) for x in v]


def enc_point(z) -> str:
    return "inf" if z is INF else enc_q(z)


def dec_q(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise SpecError(f"rational expected, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as ex:
            raise SpecError(f"malformed rational {x!r}") from ex
    raise SpecError(f"rational expected, got {x!r}")


def dec_vec(v, n: int | None = None) -> tuple[Fraction, ...]:
    if not isinstance(v, list):
        raise SpecError(f"vector expected, got {v!r}")
    out = tuple(dec_q(x) for x in v)
    if n is not None and len(out) != n:
        raise SpecError(f"vector {v!r} should have {n} entries")
    return out


def dec_int_vec(v, n: int | None = None) -> tuple[int, ...]:
    out = dec_vec(v, n)
    if any(x.denominator != 1 for x in out):
        raise SpecError(f"integer vector expected, got {v!r}")
    return tuple(int(x) for x in out)


def _field(obj: dict, key: str, default: Any = ...) -> Any:
    if not isinstance(obj, dict):
        raise SpecError("object expected")
    if key in obj:
        return obj[key]
    if default is ...:
        raise SpecError(f"missing field {key!r}")
    return default


def _sorted_vecs(vs) -> list[list[str]]:
    return [enc_vec(v) for v in sorted(vs)]


def enc_cone(c: Cone) -> list[list[str]]:
    return _sorted_vecs(c.rays)


def enc_type1(d: SphericalDataI) -> dict:
    return {
        "case": d.case,
        "v0": enc_vec(d.v0),
        "v1": enc_vec(d.v1),
        "e": enc_vec(d.e),
        "sigma": enc_cone(d.sigma),
        "delta_inf": None if d.delta_inf is None else _sorted_vecs(d.delta_inf.vertices),
    }


def dec_type1(p: dict) -> SphericalDataI:
    e = dec_int_vec(_field(p, "e"))
    n = len(e)
    v0, v1 = dec_vec(_field(p, "v0"), n), dec_vec(_field(p, "v1"), n)
    sigma = Cone.of([dec_vec(g, n) for g in _field(p, "sigma", [])], n)
    dinf = _field(p, "delta_inf", None)
    if dinf is not None:
        if not dinf:
            raise SpecError("delta_inf needs at least one vertex")
        dinf = [dec_vec(x, n) for x in dinf]
    return SphericalDataI.make(str(_field(p, "case")), v0, v1, e, sigma, dinf)


def enc_type2(d) -> dict:
    return {"sigma": enc_cone(d.sigma), "e": enc_vec(d.e)}


def dec_type2_raw(p: dict):
    e = dec_int_vec(_field(p, "e"))
    sigma = Cone.of([dec_vec(g, len(e)) for g in _field(p, "sigma")], len(e))
    return sigma, e


def dec_options(doc: dict) -> dict:
    opts = _field(doc, "options", {}) or {}
    side = opts.get("side", MINUS)
    if side not in SIDES:
        raise SpecError(f"side must be one of {SIDES}")
    bound = opts.get("bound")
    if bound is not None and (not isinstance(bound, int) or isinstance(bound, bool) or bound < 1):
        raise SpecError("bound must be a positive integer")
    return {"side": side, "bound": bound, "certify": bool(opts.get("certify", False))}


def spec_document(kind: str, payload: dict, options: dict | None = None) -> dict:
    opts = options or {"side": MINUS, "bound": None, "certify": False}
    return {"version": SCHEMA_VERSION, "kind": kind, "payload": payload, "options": opts}


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_document(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") if path != "-" else sys.stdin as fh:
            doc = json.load(fh)
    except OSError as ex:
        raise SpecError(f"cannot read {path}: {ex}") from ex
    except json.JSONDecodeError as ex:
        raise SpecError(f"invalid JSON: {ex}") from ex
    if not isinstance(doc, dict):
        raise SpecError("top-level object expected")
    version = _field(doc, "version")
    if str(version) != SCHEMA_VERSION:
        raise SpecError(f"unsupported schema version {version!r}")
    if _field(doc, "kind") not in ("type1", "type2", "catalog", "colored_cone"):
        raise SpecError(f"unknown kind {doc['kind']!r}")
    return doc


def parse_variety(doc: dict):
    """Decode a spec document into ``SphericalDataI`` or ``Type2Data``.

    Type II data is validated here since it is only defined for semisimple roots.
    """
    kind, p = doc["kind"], _field(doc, "payload")
    if kind == "type1":
        return dec_type1(p)
    if kind == "type2":
        sigma, e = dec_type2_raw(p)
        return validate_type2(sigma, e)
    if kind == "catalog":
        return catalog_homogeneous(str(_field(p, "name")), _field(p, "param", None))
    raise SpecError(f"a variety spec is expected, got kind {kind!r}")


# ---------------------------------------------------------------------------
# results

def enc_family(f) -> dict:
    return {
        "label": f.label,
        "ray": enc_vec(f.ray),
        "equalities": [{"normal": enc_vec(n), "value": enc_q(c)} for n, c in f.equalities],
        "inequalities": [{"normal": enc_vec(n), "value": enc_q(c)} for n, c in f.inequalities],
        "lattice": None if f.lattice is None else [enc_vec(b) for b in f.lattice.basis],
        "flags": list(f.flags),
    }


def enc_description(desc: RootDescription) -> list[dict]:
    return sorted((enc_family(f) for f in desc.families), key=lambda x: json.dumps(x, sort_keys=True))


def enc_certificate(c, bound: int) -> dict:
    return {"root": enc_vec(c.theta), "verdict": "pass" if c.ok else "fail",
            "construction": c.construction, "failures": list(c.failures),
            "preservation_bound": bound}


def certification_bound() -> int:
    raw = os.environ.get("SPHROOT_BOUND_DEFAULT")
    if raw is None:
        return DEFAULT_PRESERVATION_BOUND
    try:
        b = int(raw)
    except ValueError as ex:
        raise SpecError(f"SPHROOT_BOUND_DEFAULT must be an integer, got {raw!r}") from ex
    if b < 1:
        raise SpecError("SPHROOT_BOUND_DEFAULT must be positive")
    return b


def enc_colored_cone(d, side: str) -> dict:
    if isinstance(d, SphericalDataI):
        cc = colored_cone(d, side)
        table = color_table(d, side)
        labels = [{"kind": lab[0], "point": enc_point(lab[1]), "vertex": enc_vec(lab[2]), "image": enc_vec(img)}
                  if lab[0] == "vertical" else {"kind": lab[0], "ray": enc_vec(lab[1]), "image": enc_vec(img)}
                  for lab, img in table.colors + table.g_divisors]
        return {
            "side": side,
            "cone": enc_cone(cc.cone),
            "colors": _sorted_vecs(cc.colors),
            "color_table": labels[:len(table.colors)],
            "g_divisors": labels[len(table.colors):],
            "homogeneous": {"case": d.case, "v0": enc_vec(d.v0), "v1": enc_vec(d.v1), "e": enc_vec(d.e)},
        }
    cc = colored_cone_type2(d, side)
    return {
        "side": side,
        "cone": enc_cone(cc.cone),
        "colors": [enc_vec(cc.color)],
        "quotient_basis": [enc_vec(b) for b in cc.basis],
        "lifted": enc_cone(cc.lifted),
        "rho": enc_vec(cc.rho),
        "e": enc_vec(d.e),
    }


def invert_colored_cone(p: dict) -> tuple[str, dict]:
    """Spec payload recovered from a colored cone payload."""
    side = _field(p, "side")
    if side not in SIDES:
        raise SpecError(f"side must be one of {SIDES}")
    if "homogeneous" in p:
        h = p["homogeneous"]
        e = dec_int_vec(_field(h, "e"))
        n = len(e)
        homog = HomogData(str(_field(h, "case")), dec_vec(_field(h, "v0"), n), dec_vec(_field(h, "v1"), n), e)
        cone = Cone.of([dec_vec(g, n) for g in _field(p, "cone")], n)
        colors = tuple(dec_vec(c, n) for c in _field(p, "colors"))
        return "type1", enc_type1(from_colored_cone(ColoredCone(cone, colors, side), homog))
    e = dec_int_vec(_field(p, "e"))
    n = len(e)
    lifted = Cone.of([dec_vec(g, n) for g in _field(p, "lifted")], n)
    sigma = from_colored_cone_type2(lifted, dec_vec(_field(p, "rho"), n))
    return "type2", enc_type2(validate_type2(sigma, e))


# ---------------------------------------------------------------------------
# commands

def _emit(args, doc: dict, text: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write("\n".join(text) + "\n")


def cmd_validate(args) -> int:
    doc = load_document(args.file)
    try:
        d = parse_variety(doc)
    except (NotSemisimpleRoot, ValueError) as ex:
        if isinstance(ex, SpecError):
            raise
        reasons = [str(ex)]
        d = None
    else:
        reasons = validate_type1(d).reasons if isinstance(d, SphericalDataI) else []
    for r in reasons:
        print(f"- {r}", file=sys.stderr)
    out = {"version": SCHEMA_VERSION, "command": "validate", "valid": not reasons, "diagnostics": reasons}
    _emit(args, out, ["valid" if not reasons else "invalid"] + [f"- {r}" for r in reasons])
    return EXIT_OK if not reasons else EXIT_INVALID


def cmd_roots(args) -> int:
    doc = load_document(args.file)
    opts = dec_options(doc)
    side = args.side or opts["side"]
    bound = args.bound if args.bound is not None else opts["bound"]
    do_cert = args.certify or opts["certify"]
    if do_cert and bound is None:
        raise SpecError("--certify needs an enumeration bound (--bound)")
    d = parse_variety(doc)
    start = time.perf_counter()
    rs = demazure_roots(d, side)
    out = {
        "version": SCHEMA_VERSION,
        "command": "roots",
        "input": doc,
        "side": side,
        "root_description": {"interior": enc_description(rs.interior), "exterior": enc_description(rs.exterior)},
        "diagnostics": sorted(rs.diagnostics),
    }
    text = [f"interior families: {len(rs.interior.families)}", f"exterior families: {len(rs.exterior.families)}"]
    if bound is not None:
        inner, outer = rs.enumerate(bound)
        out["enumerated"] = {"bound": bound, "interior": [enc_vec(t) for t in inner],
                             "exterior": [enc_vec(t) for t in outer]}
        text += [f"interior roots (|.| <= {bound}): {inner}", f"exterior roots (|.| <= {bound}): {outer}"]
        if do_cert:
            cb = certification_bound()
            certs = [certify(d, t, cb, side) for t in inner + outer]
            out["certificates"] = [enc_certificate(c, cb) for c in certs]
            text += [f"{c.theta}: {'pass' if c.ok else 'fail'}" for c in certs]
    if args.timing:
        out["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    _emit(args, out, text)
    return EXIT_OK


def cmd_cone(args) -> int:
    doc = load_document(args.file)
    if args.inverse:
        if doc["kind"] != "colored_cone":
            raise SpecError("--inverse expects a colored_cone document")
        kind, payload = invert_colored_cone(_field(doc, "payload"))
        out = spec_document(kind, payload, _field(doc, "options", None))
        _emit(args, out, [json.dumps(payload, sort_keys=True)])
        return EXIT_OK
    opts = dec_options(doc)
    side = args.side or opts["side"]
    d = parse_variety(doc)
    if isinstance(d, SphericalDataI):
        rep = validate_type1(d)
        if not rep.valid:
            raise ValidationError(rep.reasons)
    payload = enc_colored_cone(d, side)
    out = spec_document("colored_cone", payload, doc.get("options"))
    _emit(args, out, [f"cone: {payload['cone']}", f"colors: {payload['colors']}"])
    return EXIT_OK


def cmd_catalog(args) -> int:
    d = catalog_homogeneous(args.name, args.param)
    out = spec_document("type1", enc_type1(d))
    _emit(args, out, [repr(d)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sphroot", description="Demazure roots of affine SL2 x| torus spherical varieties")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("validate", help="check the classification data")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("roots", help="describe, enumerate and certify Demazure roots")
    sp.add_argument("file")
    sp.add_argument("--bound", type=int, default=None, help="enumerate roots with sup norm at most BOUND")
    sp.add_argument("--certify", action="store_true", help="certify each enumerated root")
    sp.add_argument("--side", choices=SIDES, default=None)
    sp.add_argument("--timing", action="store_true", help="include wall-clock time in the output")
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("cone", help="colored cone of a spec, or the spec of a colored cone")
    sp.add_argument("file")
    sp.add_argument("--side", choices=SIDES, default=None)
    sp.add_argument("--inverse", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_cone)

    sp = sub.add_parser("catalog", help="emit a homogeneous spec of rank two")
    sp.add_argument("name", choices=CATALOG)
    sp.add_argument("param", type=int, nargs="?", default=None)
    common(sp)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "bound", None) is not None and args.bound < 1:
        print("error: --bound must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except SpecError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as ex:
        for r in ex.reasons:
            print(f"- {r}", file=sys.stderr)
        return EXIT_INVALID
    except (NotSemisimpleRoot, StructuralError, LatticeError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
