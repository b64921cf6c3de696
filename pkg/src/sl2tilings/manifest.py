"""Canonical JSON container for fragments, windows, friezes, certificates.

Every file is a single JSON object with ``format_version``, ``payload_kind``
and ``payload``.  Keys are sorted and array-valued entries are emitted in a
fixed order, so serialising what was just parsed reproduces the bytes.
Tiling and frieze entry values are decimal strings because they outgrow 64
bits quickly; indices and coordinates stay plain JSON numbers.
"""
from __future__ import annotations

import json
from typing import Any

from .disc_model import (Arc, DiscFragment, DiscShape, Vertex, arc,
                         shape_for_tags)
from .errors import InvalidManifest
from .frieze import FriezeWindow
from .tiling import OnesCertificate, TilingWindow

FORMAT_VERSION = "1"

KIND_FRAGMENT = "fragment"
KIND_TILING = "tiling_window"
KIND_FRIEZE = "frieze_window"
KIND_CERTIFICATE = "certificate"


def _vertex_out(v: Vertex) -> dict:
    return {"interval": v.interval, "index": v.index}


def _vertex_in(obj: Any) -> Vertex:
    try:
        return Vertex(str(obj["interval"]), int(obj["index"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidManifest(f"bad vertex object {obj!r}") from exc


def _arc_out(a: Arc) -> list:
    return [_vertex_out(a.a), _vertex_out(a.b)]


def _arc_in(obj: Any) -> Arc:
    if not isinstance(obj, list) or len(obj) != 2:
        raise InvalidManifest(f"bad arc object {obj!r}")
    try:
        return arc(_vertex_in(obj[0]), _vertex_in(obj[1]))
    except ValueError as exc:
        raise InvalidManifest(str(exc)) from exc


def fragment_payload(frag: DiscFragment) -> dict:
    key = lambda a: (a.a, a.b)
    return {
        "shape": {"n": frag.shape.n, "intervals": list(frag.shape.intervals)},
        "boundary": [_vertex_out(v) for v in frag.boundary],
        "diagonals": [_arc_out(a) for a in sorted(frag.diagonals, key=key)],
        "closures": [_arc_out(a) for a in sorted(frag.closures, key=key)],
    }


def fragment_from_payload(payload: dict) -> DiscFragment:
    try:
        shape = DiscShape(int(payload["shape"]["n"]),
                          tuple(payload["shape"]["intervals"]))
        boundary = tuple(_vertex_in(v) for v in payload["boundary"])
        diagonals = frozenset(_arc_in(a) for a in payload["diagonals"])
        closures = frozenset(_arc_in(a) for a in payload["closures"])
        frag = DiscFragment(shape, boundary, diagonals, closures)
    except InvalidManifest:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidManifest(f"bad fragment payload: {exc}") from exc
    # canonical rotation: start the boundary at its least vertex
    lo = min(range(frag.m), key=lambda i: shape.key(frag.boundary[i]))
    boundary = frag.boundary[lo:] + frag.boundary[:lo]
    return DiscFragment(shape, boundary, frag.diagonals, frag.closures)


def tiling_payload(w: TilingWindow) -> dict:
    return {
        "row_lo": w.row_lo, "row_hi": w.row_hi,
        "col_lo": w.col_lo, "col_hi": w.col_hi,
        "rows": [[str(x) for x in w.row_values(b)] for b in w.rows()],
    }


def tiling_from_payload(payload: dict) -> TilingWindow:
    try:
        rows = [[int(x) for x in row] for row in payload["rows"]]
        w = TilingWindow.from_rows(int(payload["row_lo"]), int(payload["col_lo"]), rows)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidManifest(f"bad tiling payload: {exc}") from exc
    if w.row_hi != int(payload["row_hi"]) or w.col_hi != int(payload["col_hi"]):
        raise InvalidManifest("declared ranges disagree with the row data")
    return w


def frieze_payload(w: FriezeWindow) -> dict:
    return {
        "kind": w.kind,
        "band": w.band,
        "entries": [[a, d, str(val)] for (a, d), val in sorted(w.entries.items())],
    }


def frieze_from_payload(payload: dict) -> FriezeWindow:
    try:
        entries = {(int(a), int(d)): int(val) for a, d, val in payload["entries"]}
        band = payload.get("band")
        return FriezeWindow(str(payload["kind"]), entries,
                            None if band is None else int(band))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidManifest(f"bad frieze payload: {exc}") from exc


def certificate_payload(cert: OnesCertificate) -> dict:
    return {
        "ones": [list(p) for p in cert.ones],
        "left_bounded": cert.left_bounded,
        "right_bounded": cert.right_bounded,
        "left_tail": None if cert.left_tail is None else [list(s) for s in cert.left_tail],
        "right_tail": None if cert.right_tail is None else [list(s) for s in cert.right_tail],
        "row_frieze_ones": [list(p) for p in sorted(cert.row_frieze_ones)],
        "col_frieze_ones": [list(p) for p in sorted(cert.col_frieze_ones)],
    }


def certificate_from_payload(payload: dict) -> OnesCertificate:
    try:
        def pairs(key):
            return tuple((int(a), int(b)) for a, b in payload[key])

        left_tail = payload.get("left_tail")
        right_tail = payload.get("right_tail")
        return OnesCertificate(
            ones=pairs("ones"),
            left_bounded=bool(payload["left_bounded"]),
            right_bounded=bool(payload["right_bounded"]),
            left_tail=None if left_tail is None else tuple((int(a), int(b)) for a, b in left_tail),
            right_tail=None if right_tail is None else tuple((int(a), int(b)) for a, b in right_tail),
            row_frieze_ones=pairs("row_frieze_ones"),
            col_frieze_ones=pairs("col_frieze_ones"))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidManifest(f"bad certificate payload: {exc}") from exc


_DUMPERS = {
    KIND_FRAGMENT: fragment_payload,
    KIND_TILING: tiling_payload,
    KIND_FRIEZE: frieze_payload,
    KIND_CERTIFICATE: certificate_payload,
}

_LOADERS = {
    KIND_FRAGMENT: fragment_from_payload,
    KIND_TILING: tiling_from_payload,
    KIND_FRIEZE: frieze_from_payload,
    KIND_CERTIFICATE: certificate_from_payload,
}


def dumps_manifest(kind: str, obj) -> str:
    if kind not in _DUMPERS:
        raise InvalidManifest(f"unknown payload kind {kind!r}")
    doc = {"format_version": FORMAT_VERSION, "payload_kind": kind,
           "payload": _DUMPERS[kind](obj)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads_manifest(text: str) -> tuple[str, object]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidManifest(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidManifest("manifest must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise InvalidManifest(f"unsupported format_version {doc.get('format_version')!r}")
    kind = doc.get("payload_kind")
    if kind not in _LOADERS:
        raise InvalidManifest(f"unknown payload kind {kind!r}")
    return kind, _LOADERS[kind](doc.get("payload", {}))


def write_manifest(path, kind: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_manifest(kind, obj))


def read_manifest(path) -> tuple[str, object]:
    with open(path, encoding="utf-8") as fh:
        return loads_manifest(fh.read())
