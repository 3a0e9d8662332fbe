"""JSON file formats read and written by the library and the command line.

Diagram::

    {"dom": [0, 1], "cod": [1, 0], "pairs": [["d0", "c1"], ["d1", "c0"]], "loops": {"2": 1}}

Representation (the unit matrix is always derived from ``e``)::

    {"colors": {"0": {"dim": 2, "e": [["1", "1"], ["1", "2"]]}}}

Field set::

    {"in": [0], "out": [0], "fields": [[{"event": "unit", "colors": [0], "pos": 1}, ...], ...]}
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .diagram import Diagram, Endpoint, Side
from .errors import CbrError, InvalidDiagramError, ParseError
from .represent import DualityStructure, RationalMatrix, Representation, duality_from_matrix

_ENDPOINT = re.compile(r"([dc])(\d+)$")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg} (line {exc.lineno})") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _endpoint_name(p: Endpoint) -> str:
    return f"{'dc'[p.side]}{p.index}"


def _parse_endpoint(text) -> Endpoint:
    m = _ENDPOINT.match(str(text))
    if not m:
        raise ParseError(f"bad endpoint {text!r}; expected d<i> or c<j>")
    return Endpoint(Side.DOM if m.group(1) == "d" else Side.COD, int(m.group(2)))


def diagram_to_json(f: Diagram) -> dict:
    return {
        "dom": list(f.dom),
        "cod": list(f.cod),
        "pairs": [[_endpoint_name(a), _endpoint_name(b)] for a, b in f.pairs],
        "loops": {str(k): n for k, n in f.loops},
    }


def diagram_from_json(data) -> Diagram:
    try:
        dom, cod = data["dom"], data["cod"]
        pairs = [(_parse_endpoint(a), _parse_endpoint(b)) for a, b in data.get("pairs", [])]
        loops = {int(k): int(n) for k, n in data.get("loops", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed diagram: {exc}") from None
    if not all(isinstance(k, int) for k in list(dom) + list(cod)):
        raise ParseError("colors must be integers")
    return Diagram(tuple(dom), tuple(cod), pairs, loops)


def load_diagram(path) -> Diagram:
    try:
        return diagram_from_json(load_json(path))
    except InvalidDiagramError as exc:
        raise InvalidDiagramError(f"{path}: {exc}") from None


def duality_to_json(ds: DualityStructure) -> dict:
    return {"dim": ds.dim, "e": [[str(x) for x in row] for row in ds.counit_matrix.entries]}


def representation_to_json(rep: Representation) -> dict:
    return {"colors": {str(k): duality_to_json(ds) for k, ds in sorted(rep.colors.items())}}


def representation_from_json(data) -> Representation:
    try:
        colors = data["colors"]
        out = {}
        for key, entry in colors.items():
            dim = int(entry["dim"])
            mat = RationalMatrix(entry["e"]) if "e" in entry else RationalMatrix.identity(dim)
            if mat.shape != (dim, dim):
                raise ParseError(f"color {key}: e is {mat.rows}x{mat.cols}, dim is {dim}")
            out[int(key)] = duality_from_matrix(mat)
    except CbrError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed representation: {exc!r}") from None
    return Representation(out)


def load_representation(path) -> Representation:
    return representation_from_json(load_json(path))
