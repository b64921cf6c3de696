"""Command-line front end.

Subcommands: gen (fragment -> window), invert (window + certificate ->
fragment), roundtrip, render, frieze utilities, validate.  Exit codes:
0 success, 1 semantic mismatch (round-trip failure), 2 invalid input.
Errors go to stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import manifest as mf
from .cc_counting import counting_window
from .disc_model import DiscFragment, validate_fragment
from .errors import TilingError
from .frieze import (FriezeWindow, cc_frieze_from_polygon, frieze_from_quiddity,
                     triangulation_from_cc_frieze, validate_frieze)
from .reconstruct import invert_window
from .render import ascii_fragment, ascii_window, svg_fragment, svg_window
from .tiling import TilingWindow, validate_window


class _CliFailure(Exception):
    def __init__(self, exit_code: int, payload: dict):
        super().__init__(payload.get("message", "failure"))
        self.exit_code = exit_code
        self.payload = payload


def _fail(exit_code: int, error: str, message: str, **details) -> "_CliFailure":
    return _CliFailure(exit_code, {
        "error": error, "message": message,
        "details": {k: str(v) for k, v in details.items()}})


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise _fail(2, "BadRange", f"expected LO..HI, got {text!r}") from None
    if lo_i > hi_i:
        raise _fail(2, "BadRange", f"empty range {text!r}")
    return lo_i, hi_i


def _read(path: str, kind: str):
    try:
        got_kind, obj = mf.read_manifest(path)
    except OSError as exc:
        raise _fail(2, "IOError", f"cannot read {path}: {exc}") from None
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message) from None
    if got_kind != kind:
        raise _fail(2, "WrongPayload", f"{path} holds a {got_kind}, expected {kind}")
    return obj


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    frag = _read(args.fragment, mf.KIND_FRAGMENT)
    rows = _parse_range(args.rows)
    cols = _parse_range(args.cols)
    try:
        window, _, _ = counting_window(frag, rows, cols)
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message) from None
    _write_output(mf.dumps_manifest(mf.KIND_TILING, window), args.out)
    return 0


def _cmd_invert(args) -> int:
    window = _read(args.tiling, mf.KIND_TILING)
    cert = _read(args.certificate, mf.KIND_CERTIFICATE)
    try:
        cls, frag = invert_window(window, cert)
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message, **exc.details) from None
    print(f"class: {cls.value}")
    if args.out:
        mf.write_manifest(args.out, mf.KIND_FRAGMENT, frag)
    else:
        sys.stdout.write(mf.dumps_manifest(mf.KIND_FRAGMENT, frag))
    return 0


def _cmd_roundtrip(args) -> int:
    window = _read(args.tiling, mf.KIND_TILING)
    cert = _read(args.certificate, mf.KIND_CERTIFICATE)
    rep = validate_window(window)
    if not rep.ok:
        raise _fail(2, "InvalidWindow", "window fails validation",
                    violations="; ".join(rep.violations))
    try:
        cls, frag = invert_window(window, cert)
        regen, _, _ = counting_window(frag, window.row_range, window.col_range)
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message, **exc.details) from None
    for b in window.rows():
        for v in window.cols():
            if window.get(b, v) != regen.get(b, v):
                raise _fail(1, "RoundTripMismatch",
                            f"first differing cell ({b},{v})",
                            expected=window.get(b, v), got=regen.get(b, v))
    print(f"round trip ok ({cls.value}); "
          f"{window.row_hi - window.row_lo + 1}x{window.col_hi - window.col_lo + 1} window")
    return 0


def _cmd_render(args) -> int:
    try:
        kind, obj = mf.read_manifest(args.file)
    except OSError as exc:
        raise _fail(2, "IOError", str(exc)) from None
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message) from None
    if kind == mf.KIND_FRAGMENT:
        text = ascii_fragment(obj) if args.format == "ascii" else svg_fragment(obj)
    elif kind == mf.KIND_TILING:
        text = ascii_window(obj) if args.format == "ascii" else svg_window(obj)
    else:
        raise _fail(2, "WrongPayload", f"cannot render a {kind}")
    _write_output(text, args.out)
    return 0


def _cmd_frieze(args) -> int:
    try:
        if args.frieze_cmd == "from-quiddity":
            values = tuple(int(x) for x in args.quiddity.split(","))
            fw = frieze_from_quiddity(values, depth=args.depth, start=args.start)
            _write_output(mf.dumps_manifest(mf.KIND_FRIEZE, fw), args.out)
        elif args.frieze_cmd == "from-polygon":
            frag = _read(args.file, mf.KIND_FRAGMENT)
            fw = cc_frieze_from_polygon(frag)
            _write_output(mf.dumps_manifest(mf.KIND_FRIEZE, fw), args.out)
        elif args.frieze_cmd == "to-polygon":
            fw = _read(args.file, mf.KIND_FRIEZE)
            frag = triangulation_from_cc_frieze(fw)
            _write_output(mf.dumps_manifest(mf.KIND_FRAGMENT, frag), args.out)
        else:  # validate
            fw = _read(args.file, mf.KIND_FRIEZE)
            rep = validate_frieze(fw)
            if not rep.ok:
                raise _fail(2, "InvalidFrieze", "frieze fails validation",
                            violations="; ".join(rep.violations))
            print(f"frieze ok ({fw.kind}, {len(fw.entries)} entries)")
    except ValueError as exc:
        raise _fail(2, "BadInput", str(exc)) from None
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message) from None
    return 0


def _cmd_validate(args) -> int:
    try:
        kind, obj = mf.read_manifest(args.file)
    except OSError as exc:
        raise _fail(2, "IOError", str(exc)) from None
    except TilingError as exc:
        raise _fail(2, exc.code, exc.message) from None
    if kind == mf.KIND_FRAGMENT:
        rep = validate_fragment(obj)
    elif kind == mf.KIND_TILING:
        rep = validate_window(obj)
    elif kind == mf.KIND_FRIEZE:
        rep = validate_frieze(obj)
    else:
        try:
            obj.validate()
            rep = None
        except TilingError as exc:
            raise _fail(2, exc.code, exc.message) from None
    if rep is not None and not rep.ok:
        raise _fail(2, "Invalid", f"{kind} fails validation",
                    violations="; ".join(rep.violations))
    print(f"{kind} ok")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sl2t",
                                 description="SL2-tilings and disc triangulations")
    sub = ap.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="evaluate counting on a fragment over a window")
    gen.add_argument("fragment")
    gen.add_argument("--rows", required=True, help="row range LO..HI")
    gen.add_argument("--cols", required=True, help="column range LO..HI")
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    inv = sub.add_parser("invert", help="build a fragment realising a window")
    inv.add_argument("tiling")
    inv.add_argument("certificate")
    inv.add_argument("--out")
    inv.set_defaults(func=_cmd_invert)

    rt = sub.add_parser("roundtrip", help="invert then regenerate and compare")
    rt.add_argument("tiling")
    rt.add_argument("certificate")
    rt.set_defaults(func=_cmd_roundtrip)

    rd = sub.add_parser("render", help="render a fragment or window")
    rd.add_argument("file")
    rd.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    rd.add_argument("--out")
    rd.set_defaults(func=_cmd_render)

    fz = sub.add_parser("frieze", help="frieze utilities")
    fsub = fz.add_subparsers(dest="frieze_cmd", required=True)
    fq = fsub.add_parser("from-quiddity")
    fq.add_argument("quiddity", help="comma-separated positive integers")
    fq.add_argument("--depth", type=int, required=True)
    fq.add_argument("--start", type=int, default=0)
    fq.add_argument("--out")
    fq.set_defaults(func=_cmd_frieze)
    for name in ("from-polygon", "to-polygon", "validate"):
        p = fsub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--out")
        p.set_defaults(func=_cmd_frieze)

    va = sub.add_parser("validate", help="validate any manifest file")
    va.add_argument("file")
    va.set_defaults(func=_cmd_validate)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except _CliFailure as exc:
        sys.stderr.write(json.dumps(exc.payload, sort_keys=True) + "\n")
        return exc.exit_code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
