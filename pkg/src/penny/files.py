"""The line-oriented point-set file format.

Header lines `mode`, `tolerance` (numeric mode only) and `count`, then
one point per line: eight fraction tokens in exact mode (four per
coordinate, a + b*sqrt2 + c*sqrt3 + e*sqrt6), two decimal fields in
numeric mode.  Canonical files round-trip byte-identically.
"""

from __future__ import annotations

from .errors import InputError
from .exactnum import QuadNum
from .geom import DEFAULT_TOLERANCE, EXACT, NUMERIC, PointSet


def serialize_pointset(ps: PointSet) -> str:
    lines = [f"mode {ps.mode}"]
    if ps.mode == NUMERIC:
        lines.append(f"tolerance {ps.tolerance!r}")
    lines.append(f"count {len(ps)}")
    for p in ps:
        if ps.mode == EXACT:
            lines.append(f"{p.x.to_token()} {p.y.to_token()}")
        else:
            lines.append(f"{p.x!r} {p.y!r}")
    return "\n".join(lines) + "\n"


def parse_pointset(text: str) -> PointSet:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty point-set file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "mode" or header[1] not in (EXACT, NUMERIC):
        raise InputError(f"bad mode line: {lines[0]!r}")
    mode = header[1]
    pos = 1
    tolerance = DEFAULT_TOLERANCE
    if mode == NUMERIC:
        if pos >= len(lines) or not lines[pos].startswith("tolerance "):
            raise InputError("numeric files need a tolerance line")
        try:
            tolerance = float(lines[pos].split()[1])
        except (IndexError, ValueError) as exc:
            raise InputError(f"bad tolerance line: {lines[pos]!r}") from exc
        if tolerance <= 0:
            raise InputError("tolerance must be positive")
        pos += 1
    if pos >= len(lines) or not lines[pos].startswith("count "):
        raise InputError("missing count line")
    try:
        count = int(lines[pos].split()[1])
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad count line: {lines[pos]!r}") from exc
    pos += 1
    body = lines[pos:]
    if len(body) != count:
        raise InputError(f"expected {count} point lines, found {len(body)}")

    if mode == EXACT:
        coords_exact = []
        for ln in body:
            tokens = ln.split()
            if len(tokens) != 8:
                raise InputError(f"exact point line needs 8 tokens: {ln!r}")
            x = QuadNum.from_tokens(tokens[:4])
            y = QuadNum.from_tokens(tokens[4:])
            coords_exact.append((x, y))
        return PointSet.exact(coords_exact)

    coords = []
    for ln in body:
        tokens = ln.split()
        if len(tokens) != 2:
            raise InputError(f"numeric point line needs 2 fields: {ln!r}")
        try:
            coords.append((float(tokens[0]), float(tokens[1])))
        except ValueError as exc:
            raise InputError(f"bad coordinate in {ln!r}") from exc
    return PointSet.numeric(coords, tolerance=tolerance)


def write_pointset(ps: PointSet, path: str) -> None:
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(serialize_pointset(ps))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def read_pointset(path: str) -> PointSet:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_pointset(text)
