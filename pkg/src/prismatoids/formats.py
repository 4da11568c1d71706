"""Vertex and half-space file formats, plus machine-readable run reports.

The text format follows the classical vertex/facet enumeration ecosystem:

    <name>
    V-representation
    begin
    <rows> <columns> rational
    1 x1 ... xd
    end

V rows carry a leading 1 before the d coordinates; H rows read
"b a1 ... ad" for the inequality b - sum(ai xi) >= 0.  Emission is
canonical (single spaces, lowest-term rationals), so parse/emit round-trips
canonical files byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exact import QQ, rational_from_string, rational_to_string
from .geometry import Hyperplane, VPolytope


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass
class VFile:
    name: str
    polytope: VPolytope


@dataclass
class HFile:
    name: str
    dim: int
    planes: list  # of Hyperplane, each <normal, x> <= offset


def _parse_body(lines, start, kind):
    if start >= len(lines) or lines[start].strip() != "begin":
        raise FormatError("expected 'begin'", start + 1)
    header = lines[start + 1].split()
    if len(header) != 3 or header[2] != "rational":
        raise FormatError("header must read '<rows> <cols> rational'", start + 2)
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(str(exc), start + 2) from None
    rows = []
    for k in range(nrows):
        ln = start + 2 + k
        if ln >= len(lines):
            raise FormatError("body ended before the declared row count", ln + 1)
        toks = lines[ln].split()
        if len(toks) != ncols:
            raise FormatError(f"expected {ncols} entries, found {len(toks)}", ln + 1)
        try:
            rows.append(tuple(rational_from_string(t) for t in toks))
        except ValueError as exc:
            raise FormatError(f"bad rational: {exc}", ln + 1) from None
    endln = start + 2 + nrows
    if endln >= len(lines) or lines[endln].strip() != "end":
        raise FormatError("expected 'end'", endln + 1)
    return rows, ncols


def parse_vfile(text: str) -> VFile:
    lines = text.splitlines()
    if len(lines) < 2:
        raise FormatError("file too short", 1)
    name = lines[0].strip()
    if lines[1].strip() != "V-representation":
        raise FormatError("expected 'V-representation'", 2)
    rows, ncols = _parse_body(lines, 2, "V")
    verts = []
    for i, row in enumerate(rows):
        if row[0] != 1:
            raise FormatError("V rows must start with 1", 4 + i)
        verts.append(row[1:])
    return VFile(name, VPolytope(ncols - 1, tuple(verts)))


def emit_vfile(vf: VFile) -> str:
    P = vf.polytope
    lines = [vf.name, "V-representation", "begin", f"{P.n} {P.dim + 1} rational"]
    for v in P.vertices:
        lines.append("1 " + " ".join(rational_to_string(c) for c in v))
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_hfile(text: str) -> HFile:
    lines = text.splitlines()
    if len(lines) < 2:
        raise FormatError("file too short", 1)
    name = lines[0].strip()
    if lines[1].strip() != "H-representation":
        raise FormatError("expected 'H-representation'", 2)
    rows, ncols = _parse_body(lines, 2, "H")
    planes = [Hyperplane(row[1:], row[0]) for row in rows]
    return HFile(name, ncols - 1, planes)


def emit_hfile(hf: HFile) -> str:
    lines = [hf.name, "H-representation", "begin",
             f"{len(hf.planes)} {hf.dim + 1} rational"]
    for pl in hf.planes:
        c = pl.canonical()
        lines.append(rational_to_string(c.offset) + " " +
                     " ".join(rational_to_string(a) for a in c.normal))
    lines.append("end")
    return "\n".join(lines) + "\n"


@dataclass
class RunReport:
    command: str
    input_digest: str = ""
    fields: dict = field(default_factory=dict)
    phases: dict = field(default_factory=dict)
    seed: int = 0
    threads: int = 1
    passed: bool = True

    def phase(self, name: str, seconds: float):
        self.phases[name] = round(seconds * 1000, 3)

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "input_digest": self.input_digest,
            "seed": self.seed,
            "threads": self.threads,
            "passed": self.passed,
            "elapsed_ms": self.phases,
        }
        body.update(self.fields)
        return json.dumps(body, sort_keys=True)


def exact_field(value) -> str:
    """Exact quantities are reported as rational strings, never floats."""
    return rational_to_string(QQ(value))
