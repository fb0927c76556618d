"""File formats: exact patch JSON, quad corner dumps, SVG drawings."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .ring import AlgebraicPoint, Family, system
from .substitution import Patch, Tile, TileKind, parse_kind

EMBEDDING_VERSION = 1


class PatchFormatError(ValueError):
    pass


def patch_to_dict(p: Patch) -> dict[str, Any]:
    return {
        "family": p.family.value,
        "seedKind": p.seed_kind.variant,
        "generation": p.generation,
        "embeddingVersion": EMBEDDING_VERSION,
        "tiles": [
            {
                "kind": t.kind.variant,
                "mirrored": t.mirrored,
                "vertices": [[list(c) for c in v.coords] for v in t.vertices],
            }
            for t in p.tiles
        ],
    }


def dumps_patch(p: Patch) -> str:
    return json.dumps(patch_to_dict(p), separators=(",", ":")) + "\n"


def patch_from_dict(d: dict[str, Any]) -> Patch:
    try:
        fam = Family.parse(d["family"])
        sys = system(fam)
        seed = parse_kind(fam, d["seedKind"])
        gen = int(d["generation"])
        width = 2 if sys.is_pair else 1
        tiles = []
        for rec in d["tiles"]:
            kind = TileKind(fam, rec["kind"])
            verts = []
            for v in rec["vertices"]:
                if len(v) != width or any(len(c) != 4 for c in v):
                    raise PatchFormatError("vertex has the wrong shape for this family")
                verts.append(AlgebraicPoint(sys, tuple(tuple(int(x) for x in c) for c in v)))
            tiles.append(Tile(kind, tuple(verts), bool(rec.get("mirrored", False))))
    except PatchFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise PatchFormatError(f"invalid patch document: {exc}") from exc
    return Patch(fam, seed, gen, tuple(tiles))


def loads_patch(text: str) -> Patch:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PatchFormatError(f"not JSON: {exc}") from exc
    return patch_from_dict(d)


def read_patch(path: str | Path) -> Patch:
    return loads_patch(Path(path).read_text())


def write_patch(p: Patch, path: str | Path) -> None:
    Path(path).write_text(dumps_patch(p))


# ---------------------------------------------------------------------------
# quad corner dump
# ---------------------------------------------------------------------------


def compat_quad_dump(p: Patch, offset: float = 1.0) -> str:
    """Four "x y" lines per tile followed by a "0 0" sentinel line.

    Coordinates are translated so the bounding box starts at
    (offset, offset). Readers of this format stop at the first "0 0" pair,
    so a genuine corner at the origin would truncate the file.
    """
    if p.family is Family.A2:
        raise ValueError("the quad dump needs 4-corner tiles; A2 tiles are hexagons")
    emb = [t.embedded() for t in p.tiles]
    xmin = min(x for e in emb for x, _ in e)
    ymin = min(y for e in emb for _, y in e)
    lines = []
    for e in emb:
        for x, y in e:
            lines.append(f"{x - xmin + offset:.10g} {y - ymin + offset:.10g}")
    lines.append("0 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

KIND_COLOURS = {
    "Kite": "#f2c14e",
    "Dart": "#5d8aa8",
    "Fat": "#e07a5f",
    "Thin": "#81b29a",
    "Square": "#f4a261",
    "Rhomb45": "#2a9d8f",
    "LargeHex": "#e9c46a",
    "SmallHex": "#264653",
}


def render_svg(p: Patch, stroke: str = "#222222", fill_by_kind: bool = True, size: float = 800.0) -> str:
    emb = [t.embedded() for t in p.tiles]
    xs = [x for e in emb for x, _ in e]
    ys = [y for e in emb for _, y in e]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    k = size / span
    w, h = (x1 - x0) * k, (y1 - y0) * k
    sw = max(0.2, 0.02 * k)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 2:.2f}" height="{h + 2:.2f}" '
        f'viewBox="-1 -1 {w + 2:.2f} {h + 2:.2f}">'
    ]
    for t, e in zip(p.tiles, emb):
        pts = " ".join(f"{(x - x0) * k:.3f},{(y1 - y) * k:.3f}" for x, y in e)
        fill = KIND_COLOURS.get(t.kind.variant, "#cccccc") if fill_by_kind else "none"
        out.append(f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}" stroke-width="{sw:.3f}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
