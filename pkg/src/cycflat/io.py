"""Text formats for lattices and matroids, and JSON/text emission.

Lattice files::

    # B2
    elements: 0 a b 1
    order: 0<a 0<b a<1 b<1

Matroid files::

    ground: 3
    cyclicflat: {} rank 0
    cyclicflat: {0,1,2} rank 2
"""

from __future__ import annotations

import json
import re
from functools import singledispatch

from .errors import ParseError
from .lattice import Lattice, build_lattice, covers
from .matroid import Matroid, format_set, matroid_from_cyclic_flats
from .mi import TrVerdict
from .transversal import MIReport
from .witness import WitnessBundle

SCHEMA_VERSION = 1

_FLAT_LINE = re.compile(r"^\{\s*([0-9,\s]*)\}\s+rank\s+(-?\d+)$")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _split_key(number: int, line: str) -> tuple[str, str]:
    if ":" not in line:
        raise ParseError(number, f"expected 'key: value', got {line!r}")
    key, value = line.split(":", 1)
    return key.strip().lower(), value.strip()


def parse_lattice_file(text: str) -> Lattice:
    labels: list[str] = []
    relations = []
    pending = []
    for number, line in _lines(text):
        key, value = _split_key(number, line)
        if key == "elements":
            labels.extend(value.split())
        elif key == "order":
            for token in value.split():
                parts = token.split("<")
                if len(parts) < 2 or any(not p for p in parts):
                    raise ParseError(number, f"malformed relation {token!r}")
                pending.append((number, parts))
        else:
            raise ParseError(number, f"unknown key {key!r}")
    if not labels:
        raise ParseError(0, "no 'elements:' line")
    if len(set(labels)) != len(labels):
        raise ParseError(0, "duplicate element labels")
    known = set(labels)
    for number, parts in pending:
        for p in parts:
            if p not in known:
                raise ParseError(number, f"unknown element {p!r}")
        relations.extend(zip(parts, parts[1:]))
    return build_lattice(labels, relations)


def parse_matroid_file(text: str) -> Matroid:
    n = None
    family = []
    for number, line in _lines(text):
        key, value = _split_key(number, line)
        if key == "ground":
            if not value.isdigit():
                raise ParseError(number, f"ground size must be a nonnegative integer, got {value!r}")
            n = int(value)
        elif key == "cyclicflat":
            m = _FLAT_LINE.match(value)
            if not m:
                raise ParseError(number, f"expected '{{i,j,...}} rank R', got {value!r}")
            members = [p.strip() for p in m.group(1).split(",") if p.strip()]
            elems = {int(p) for p in members}
            if n is not None and any(e >= n for e in elems):
                raise ParseError(number, f"element outside ground set of size {n}")
            family.append((elems, int(m.group(2))))
        else:
            raise ParseError(number, f"unknown key {key!r}")
    if n is None:
        raise ParseError(0, "no 'ground:' line")
    return matroid_from_cyclic_flats(n, family)


def parse_ranks(L: Lattice, spec: str) -> list[int]:
    """Parse ``"a=0,b=2,..."`` into a rank list indexed like ``L``."""
    ranks = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ParseError(0, f"rank entry {item!r} is not label=value")
        lab, val = item.split("=", 1)
        if lab.strip() not in L._index:
            raise ParseError(0, f"unknown element {lab.strip()!r}")
        ranks[L.index(lab.strip())] = int(val)
    missing = [L.labels[x] for x in range(len(L)) if x not in ranks]
    if missing:
        raise ParseError(0, f"no rank given for {missing}")
    return [ranks[x] for x in range(len(L))]


# --- emission ------------------------------------------------------------

def lattice_text(L: Lattice) -> str:
    labels = [str(a) for a in L.labels]
    rel = " ".join(f"{labels[x]}<{labels[y]}" for x, y in covers(L))
    out = f"elements: {' '.join(labels)}\n"
    if rel:
        out += f"order: {rel}\n"
    return out


def matroid_text(M: Matroid) -> str:
    lines = [f"ground: {M.n}"]
    lines += [f"cyclicflat: {format_set(f)} rank {r}" for f, r in zip(M.flats, M.ranks)]
    return "\n".join(lines) + "\n"


@singledispatch
def to_dict(obj) -> dict:
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@to_dict.register
def _(L: Lattice) -> dict:
    labels = [str(a) for a in L.labels]
    return {"type": "lattice", "elements": labels,
            "covers": [[labels[x], labels[y]] for x, y in covers(L)]}


@to_dict.register
def _(M: Matroid) -> dict:
    return {"type": "matroid", "ground": M.n,
            "cyclic_flats": [{"set": sorted(_members(f)), "rank": r}
                             for f, r in zip(M.flats, M.ranks)]}


@to_dict.register
def _(v: TrVerdict) -> dict:
    return {"type": "verdict", **v.as_dict()}


@to_dict.register
def _(rep: MIReport) -> dict:
    return {"type": "mi_report", **rep.as_dict()}


@to_dict.register
def _(w: WitnessBundle) -> dict:
    return {"type": "witness", "x": w.x, "k": w.k, "triple": list(w.triple),
            "rho": list(w.rho), "violators": [format_set(f) for f in w.violators],
            "alternating_sum": w.alternating_sum, "matroid": to_dict(w.matroid)}


def _members(mask: int) -> list[int]:
    return [e for e in range(mask.bit_length()) if mask >> e & 1]


def emit(obj, fmt: str = "text") -> str:
    """Serialize a lattice, matroid, verdict, report or witness."""
    if fmt == "json":
        payload = {"schema_version": SCHEMA_VERSION, **to_dict(obj)}
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, Lattice):
        return lattice_text(obj)
    if isinstance(obj, Matroid):
        return matroid_text(obj)
    d = to_dict(obj)
    d.pop("type")
    d.pop("matroid", None)
    return "".join(f"{k}: {_plain(v)}\n" for k, v in d.items())


def _plain(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        return " ".join(map(str, value))
    return str(value)
