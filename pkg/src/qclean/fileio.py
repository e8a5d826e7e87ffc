"""Plain-text code files: one format, three headers.

    CSS n=<n>      followed by sections `HX:` and `HZ:`, rows of n chars
    STAB n=<n>     rows of 2n chars, x block then z block; rows generate S
    GAUGE n=<n>    same row layout; rows generate the gauge subspace G

Rows are strings of '0'/'1'.  Lines starting with '#' and blank lines are
ignored.  Parsing validates the structural invariants (Hx Hz^T = 0,
isotropy) and reports the offending line on failure.
"""

from __future__ import annotations

from .codes import CssCode, StabilizerCode, SubsystemCode
from .errors import InvariantViolationError, ParseError
from .gf2 import BinaryMatrix
from .subspaces import span

__all__ = ["parse_code_file", "serialize"]


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _parse_header(lineno: int, line: str) -> tuple[str, int]:
    parts = line.split()
    if len(parts) != 2 or parts[0] not in ("CSS", "STAB", "GAUGE"):
        raise ParseError(lineno, f"expected 'CSS|STAB|GAUGE n=<n>', got {line!r}")
    if not parts[1].startswith("n="):
        raise ParseError(lineno, f"expected 'n=<n>', got {parts[1]!r}")
    try:
        n = int(parts[1][2:])
    except ValueError:
        raise ParseError(lineno, f"invalid qubit count {parts[1][2:]!r}") from None
    if n < 1:
        raise ParseError(lineno, "qubit count must be positive")
    return parts[0], n


def _parse_row(lineno: int, line: str, width: int) -> list[int]:
    if len(line) != width or set(line) - {"0", "1"}:
        raise ParseError(
            lineno, f"expected a row of {width} '0'/'1' characters, got {line!r}"
        )
    return [int(ch) for ch in line]


def parse_code_file(text: str) -> CssCode | StabilizerCode | SubsystemCode:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty file")
    (hline, header), body = lines[0], lines[1:]
    kind, n = _parse_header(hline, header)
    if kind == "CSS":
        return _parse_css(n, body)
    rows = [_parse_row(ln, line, 2 * n) for ln, line in body]
    if kind == "STAB":
        try:
            return StabilizerCode(n, span(rows, 2 * n))
        except InvariantViolationError:
            raise InvariantViolationError(
                "stabilizer rows are not mutually commuting (S not isotropic)"
            ) from None
    return SubsystemCode(n, span(rows, 2 * n))


def _parse_css(n: int, body: list[tuple[int, str]]) -> CssCode:
    sections: dict[str, list[list[int]]] = {}
    current: str | None = None
    for ln, line in body:
        if line in ("HX:", "HZ:"):
            key = line[:2]
            if key in sections:
                raise ParseError(ln, f"duplicate section {line!r}")
            sections[key] = []
            current = key
        elif current is None:
            raise ParseError(ln, "expected 'HX:' or 'HZ:' section header")
        else:
            sections[current].append(_parse_row(ln, line, n))
    hx = BinaryMatrix.from_rows(sections.get("HX", []), n) if sections.get("HX") \
        else BinaryMatrix.zeros(0, n)
    hz = BinaryMatrix.from_rows(sections.get("HZ", []), n) if sections.get("HZ") \
        else BinaryMatrix.zeros(0, n)
    code = CssCode(hx, hz)
    return code


def _row_str(bits) -> str:
    return "".join(str(int(b)) for b in bits)


def serialize(code: CssCode | StabilizerCode | SubsystemCode) -> str:
    """Inverse of parse_code_file up to basis choice: CSS codes round-trip
    bit-exactly; STAB/GAUGE files carry the canonical rref generators."""
    if isinstance(code, CssCode):
        lines = [f"CSS n={code.n}", "HX:"]
        lines += [_row_str(r) for r in code.hx.to_dense()]
        lines.append("HZ:")
        lines += [_row_str(r) for r in code.hz.to_dense()]
    elif isinstance(code, StabilizerCode):
        lines = [f"STAB n={code.n}"]
        lines += [_row_str(r) for r in code.stabilizer.basis.to_dense()]
    elif isinstance(code, SubsystemCode):
        lines = [f"GAUGE n={code.n}"]
        lines += [_row_str(r) for r in code.gauge.basis.to_dense()]
    else:
        raise TypeError(f"cannot serialize {type(code).__name__}")
    return "\n".join(lines) + "\n"
