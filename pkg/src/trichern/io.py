"""The bundle fixture file format (JSON) and its round-trip helpers.

A bundle file carries explicit facet lists so that triangulations can be
transcribed by hand from the literature.  The base accepts the shortcut
string ``"boundary-simplex: 3"`` because the tetrahedron boundary is the
protagonist base.  Unknown fields are rejected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .bases import boundary_simplex
from .complexes import SimplicialComplex, SimplicialMap, build_complex
from .errors import BundleFileError

FORMAT_VERSION = "1"
_FIELDS = {"format_version", "base", "total", "vertex_map", "orientation_seed"}


@dataclass(frozen=True)
class BundleFile:
    """Parsed (schema-level) contents of a bundle file."""

    base: list | str
    total: list
    vertex_map: list
    orientation_seed: tuple[int, int] | None = None
    format_version: str = FORMAT_VERSION


def _facet_list(value, field: str) -> list:
    if not isinstance(value, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) for v in f) for f in value
    ):
        raise BundleFileError(f"field {field!r} must be a list of vertex-id lists")
    return value


def parse_bundle_json(text: str) -> BundleFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleFileError(
            f"not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise BundleFileError("top level must be a JSON object")
    unknown = set(data) - _FIELDS
    if unknown:
        raise BundleFileError(f"unknown field(s): {', '.join(sorted(unknown))}")
    for required in ("format_version", "base", "total", "vertex_map"):
        if required not in data:
            raise BundleFileError(f"missing field {required!r}")
    if data["format_version"] != FORMAT_VERSION:
        raise BundleFileError(
            f"unrecognized format_version {data['format_version']!r}, expected {FORMAT_VERSION!r}"
        )
    base = data["base"]
    if isinstance(base, str):
        parts = [p.strip() for p in base.split(":")]
        if len(parts) != 2 or parts[0] != "boundary-simplex" or not parts[1].isdigit():
            raise BundleFileError(f"unrecognized base shortcut {base!r}")
    else:
        base = _facet_list(base, "base")
    total = _facet_list(data["total"], "total")
    vm = data["vertex_map"]
    if not isinstance(vm, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)
        for p in vm
    ):
        raise BundleFileError("field 'vertex_map' must be a list of [total, base] pairs")
    seen = set()
    for v, _ in vm:
        if v in seen:
            raise BundleFileError(f"vertex {v} mapped twice in 'vertex_map'")
        seen.add(v)
    seed = data.get("orientation_seed")
    if seed is not None:
        if not (isinstance(seed, list) and len(seed) == 2 and all(isinstance(v, int) for v in seed)):
            raise BundleFileError("field 'orientation_seed' must be a pair [u, v]")
        seed = (seed[0], seed[1])
    return BundleFile(base=base, total=total, vertex_map=vm, orientation_seed=seed)


def load_bundle_file(path: str | Path) -> BundleFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BundleFileError(f"cannot read {path}: {exc}") from exc
    return parse_bundle_json(text)


def save_bundle_file(path: str | Path, bf: BundleFile) -> None:
    data: dict = {
        "format_version": bf.format_version,
        "base": bf.base,
        "total": bf.total,
        "vertex_map": [list(p) for p in bf.vertex_map],
    }
    if bf.orientation_seed is not None:
        data["orientation_seed"] = list(bf.orientation_seed)
    Path(path).write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")


def build_base(bf: BundleFile) -> SimplicialComplex:
    if isinstance(bf.base, str):
        k = int(bf.base.split(":")[1].strip())
        return boundary_simplex(k)
    return build_complex(bf.base)


def build_bundle_input(
    bf: BundleFile,
) -> tuple[SimplicialComplex, SimplicialComplex, SimplicialMap]:
    """Construct (total, base, map); raises the library's structural
    errors if the facet lists or the map are malformed."""
    base = build_base(bf)
    total = build_complex(bf.total)
    vmap = {v: w for v, w in bf.vertex_map}
    return total, base, SimplicialMap(total, base, vmap)


def bundle_file_for(
    total: SimplicialComplex,
    base: SimplicialComplex,
    m: SimplicialMap,
    orientation_seed: tuple[int, int] | None = None,
) -> BundleFile:
    return BundleFile(
        base=[list(f) for f in base.facets],
        total=[list(f) for f in total.facets],
        vertex_map=[[v, m.vertex_map[v]] for v in total.vertices],
        orientation_seed=orientation_seed,
    )


def fixture_path(name: str) -> Path:
    """Path of a fixture shipped with the package."""
    return Path(__file__).parent / "fixtures" / name
