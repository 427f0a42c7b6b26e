"""Command-line front end.

Exit codes: 0 success, 1 golden or oracle mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import core, hammocks, silting
from .core import KINDS, InvalidCoord, InvalidParams, ObjCoord, Params

SCHEMA = 1


class UsageError(Exception):
    pass


# --- argument types ------------------------------------------------------------

def _params(text: str) -> Params:
    try:
        return core.parse_params(text)
    except InvalidParams as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _coord(text: str) -> ObjCoord:
    try:
        return core.parse_coord(text)
    except InvalidCoord as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _box(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        box = int(lo), int(hi)
    except ValueError:
        box = None
    if not sep or box is None:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    if box[0] > box[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return box


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _check(P: Params, *objs: ObjCoord) -> None:
    for A in objs:
        try:
            core.check_coord(P, A)
        except InvalidCoord as e:
            raise UsageError(str(e)) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# --- commands --------------------------------------------------------------------

def cmd_hom(P: Params, A: ObjCoord, B: ObjCoord, degree: int | None = None, graded: bool = False) -> str:
    _check(P, A, B)
    if graded:
        return json.dumps(hammocks.to_json_graded(hammocks.graded_hom(P, A, B)))
    if degree is not None:
        return str(hammocks.graded_hom(P, A, B).get(degree, 0))
    return str(hammocks.hom_dim(P, A, B))


def _names(S) -> list[str]:
    return [str(A) for A in silting.sorted_object(S)]


def _families_json(fams) -> list[dict]:
    ordered = sorted(fams, key=lambda f: (f.tau_power, f.quiver_index))
    return [f.to_json() for f in ordered]


def cmd_silting(P: Params, Zobj: ObjCoord, box: tuple[int, int]) -> tuple[dict, bool]:
    _check(P, Zobj)
    try:
        objs, fams = silting.enumerate_silting(P, Zobj, box)
    except silting.NotZComponent as e:
        raise UsageError(str(e)) from None
    size = P.n + P.m
    instances = []
    ok = True
    for S in objs:
        good = len(S) == size and silting.is_partial_silting(P, S)
        ok &= good
        instances.append({"object": _names(S), "partial_silting": good})
    report = {
        "schema": SCHEMA,
        "params": str(P),
        "z": str(Zobj),
        "box": list(box),
        "families": _families_json(fams),
        "instances": instances,
        "all_partial_silting": ok,
    }
    return report, ok


def cmd_tilting(P: Params, Zobj: ObjCoord, window: int) -> dict:
    _check(P, Zobj)
    try:
        T = silting.tilting_with(P, Zobj, window)
    except silting.NotZComponent as e:
        raise UsageError(str(e)) from None
    return {
        "schema": SCHEMA,
        "params": str(P),
        "z": str(Zobj),
        "window": window,
        "tilting": [_names(S) for S in T],
    }


TABLE_PARAMS = core.make_params(2, 3, 1)
TABLE_Z = core.Z(0, 0, 0)
TABLE_TILT_WINDOW = 3


def table231_text() -> str:
    P, Zobj = TABLE_PARAMS, TABLE_Z
    doc = {
        "schema": SCHEMA,
        "params": str(P),
        "z": str(Zobj),
        "families": _families_json(silting.silting_families(P, Zobj)),
        "tilting": [_names(S) for S in silting.tilting_with(P, Zobj, TABLE_TILT_WINDOW)],
    }
    return _dump(doc) + "\n"


def golden_table231() -> str:
    return resources.files("ddcat").joinpath("data/table231.json").read_text(encoding="utf-8")


def cmd_table231() -> tuple[str, bool]:
    text = table231_text()
    return text, text == golden_table231()


def cmd_oracle_check(P: Params, window: int, samples: int, seed: int, perturb: bool = False) -> tuple[str, bool]:
    from .oracle import dictionary

    D = dictionary.build_dictionary(P, window=window)
    checks = dictionary.cross_check(D, count=samples, seed=seed)
    if perturb and checks:
        # fault injection: claim one more map than the engine computed
        c = checks[0]
        checks[0] = dictionary.PairCheck(c.A, c.B, c.engine + 1, c.stable, c.combinatorial, c.linear)
    engine_ok = sum(c.engine == c.stable for c in checks)
    comb_bad = sum(c.combinatorial != c.linear for c in checks)
    agree = sum(c.ok for c in checks)
    lines = [
        f"params {P}  window {window}  seed {seed}",
        f"dictionary: {len(D)} objects in {len(D.components())} components",
        f"engine hom vs stable hom: {engine_ok}/{len(checks)} agree",
        f"combinatorial vs linear hom: {comb_bad} mismatches",
        f"overall: {agree}/{len(checks)} agree",
    ]
    for c in checks:
        if not c.ok:
            lines.append(
                f"MISMATCH {c.A} -> {c.B}: engine {c.engine} stable {c.stable} "
                f"combinatorial {c.combinatorial} linear {c.linear}"
            )
    return "\n".join(lines) + "\n", agree == len(checks) and len(checks) == samples


def ar_window(P: Params, window: int) -> list[ObjCoord]:
    """Objects with |i|, |j| < window; window 0 is empty."""
    return core.window_objects(P, window - 1) if window > 0 else []


def cmd_export_ar(P: Params, window: int, fmt: str, shade: ObjCoord | None = None) -> str:
    if shade is not None:
        _check(P, shade)
    objs = ar_window(P, window)
    present = set(objs)
    edges = [(A, B) for A in objs for B in core.mesh_neighbours(A) if B in present]
    dims = {B: hammocks.hom_dim(P, shade, B) for B in objs} if shade is not None else {}
    comps = [(kind, k) for kind in KINDS for k in range(P.r) if any(
        A.kind == kind and A.comp == k for A in objs)]

    if fmt == "json":
        return _dump({
            "schema": SCHEMA,
            "params": str(P),
            "window": window,
            "components": [f"{kind}{k}" for kind, k in comps],
            "nodes": [
                {"id": str(A), "component": f"{A.kind}{A.comp}", "hom": dims.get(A, 0)} for A in objs
            ],
            "edges": [[str(A), str(B)] for A, B in edges],
            "shade": str(shade) if shade is not None else None,
        }) + "\n"

    if fmt == "text":
        out = [f"params {P} window {window} components {len(comps)}"]
        for kind, k in comps:
            out.append(f"component {kind}{k}")
            for A in objs:
                if A.kind == kind and A.comp == k:
                    succ = " ".join(str(B) for X_, B in edges if X_ == A)
                    mark = f" hom={dims[A]}" if dims.get(A) else ""
                    out.append(f"  {A}{mark} -> {succ}" if succ else f"  {A}{mark}")
        return "\n".join(out) + "\n"

    out = ["digraph AR {", "  rankdir=LR;", "  node [shape=plaintext, fontsize=10];"]
    for kind, k in comps:
        out.append(f'  subgraph "cluster_{kind}{k}" {{')
        out.append(f'    label="{kind}^{k}";')
        for A in objs:
            if A.kind != kind or A.comp != k:
                continue
            attrs = [f'label="{A.i},{A.j}"', f'pos="{A.i},{A.j}!"']
            if dims.get(A):
                attrs += ["style=filled", 'fillcolor="gray80"', f'xlabel="{dims[A]}"']
            out.append(f'    "{A}" [{", ".join(attrs)}];')
        out.append("  }")
    for A, B in edges:
        out.append(f'  "{A}" -> "{B}";')
    out.append("}")
    return "\n".join(out) + "\n"


# --- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ddcat", description="Discrete derived categories D^b(Lambda(r,n,m)).")
    sub = ap.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hom", help="dimension of Hom(A, B) or the graded Hom")
    h.add_argument("--params", type=_params, required=True, metavar="r,n,m")
    h.add_argument("--from", dest="source", type=_coord, required=True, metavar="KIND:k:i:j")
    h.add_argument("--to", dest="target", type=_coord, required=True, metavar="KIND:k:i:j")
    g = h.add_mutually_exclusive_group()
    g.add_argument("--graded", action="store_true", help="print {degree: dim} as JSON")
    g.add_argument("--degree", type=int, help="dimension of Hom(A, Sigma^d B)")

    s = sub.add_parser("silting", help="silting objects with a given minimal Z summand")
    s.add_argument("--params", type=_params, required=True, metavar="r,n,m")
    s.add_argument("--z", type=_coord, default=core.Z(0, 0, 0), metavar="Z:k:i:j")
    s.add_argument("--box", type=_box, default=(-1, 1), metavar="lo..hi")

    sub.add_parser("table231", help="silting families for (2,3,1), checked against the golden file")

    t = sub.add_parser("tilting", help="tilting objects containing a Z summand")
    t.add_argument("--params", type=_params, required=True, metavar="r,n,m")
    t.add_argument("--z", type=_coord, default=core.Z(0, 0, 0), metavar="Z:k:i:j")
    t.add_argument("--window", type=_positive, default=TABLE_TILT_WINDOW)

    o = sub.add_parser("oracle-check", help="compare hammock dimensions with string-module computations")
    o.add_argument("--params", type=_params, default=TABLE_PARAMS, metavar="r,n,m")
    o.add_argument("--window", type=_positive, default=4)
    o.add_argument("--samples", type=_positive, default=200)
    o.add_argument("--seed", type=_nonneg, default=0)
    o.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)

    e = sub.add_parser("export-ar", help="AR quiver window as DOT, text or JSON")
    e.add_argument("--params", type=_params, required=True, metavar="r,n,m")
    e.add_argument("--window", type=_nonneg, default=3, help="objects with |i|,|j| < W")
    e.add_argument("--format", choices=("dot", "text", "json"), default="dot")
    e.add_argument("--shade", type=_coord, metavar="KIND:k:i:j", help="shade the Hom hammock of this object")
    return ap


def _glue_ranges(argv: list[str]) -> list[str]:
    # argparse takes "-1..1" for an option; attach range values to their flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--box":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--box={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(_glue_ranges(sys.argv[1:] if argv is None else list(argv)))
    try:
        if args.command == "hom":
            print(cmd_hom(args.params, args.source, args.target, args.degree, args.graded))
            return 0
        if args.command == "silting":
            report, ok = cmd_silting(args.params, args.z, args.box)
            print(_dump(report))
            return 0 if ok else 1
        if args.command == "table231":
            text, ok = cmd_table231()
            sys.stdout.write(text)
            if not ok:
                print("table231: output differs from the golden file", file=sys.stderr)
            return 0 if ok else 1
        if args.command == "tilting":
            print(_dump(cmd_tilting(args.params, args.z, args.window)))
            return 0
        if args.command == "oracle-check":
            text, ok = cmd_oracle_check(args.params, args.window, args.samples, args.seed, args.perturb)
            sys.stdout.write(text)
            return 0 if ok else 1
        if args.command == "export-ar":
            sys.stdout.write(cmd_export_ar(args.params, args.window, args.format, args.shade))
            return 0
    except UsageError as e:
        ap.error(str(e))
    return 2


if __name__ == "__main__":
    sys.exit(main())
