"""The .tour text format.

Line 1 is the order n in decimal; the next n lines are rows of exactly n
characters from {0, 1}, row i listing the out-arcs of vertex i (character
j is 1 iff the arc i -> j is present).  A single trailing newline is
allowed.  Textual problems raise ParseError with 1-based line/column;
structural problems (loops, missing or doubled arcs) surface as the
usual validation errors.  This format is the bit-exact ground truth for
fixtures.
"""

from __future__ import annotations

import os

from .core import Tournament, validate
from .errors import ParseError


def parse_tour(text: str) -> Tournament:
    """Parse .tour text into a validated Tournament."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # single trailing newline
    if not lines:
        raise ParseError("empty input", line=1)
    header = lines[0]
    if not header or not all("0" <= ch <= "9" for ch in header):
        col = next((k + 1 for k, ch in enumerate(header)
                    if not "0" <= ch <= "9"), 1)
        raise ParseError("order line must be a decimal integer", line=1, col=col)
    n = int(header)
    if len(lines) - 1 != n:
        # point at the first missing or first extra line
        where = len(lines) + 1 if len(lines) - 1 < n else n + 2
        raise ParseError(f"expected {n} rows after the order line, "
                         f"got {len(lines) - 1}", line=where)
    rows = []
    for i, raw in enumerate(lines[1:]):
        if len(raw) != n:
            raise ParseError(f"row {i} must have exactly {n} characters",
                             line=i + 2, col=min(len(raw) + 1, n + 1))
        r = 0
        for j, ch in enumerate(raw):
            if ch == "1":
                r |= 1 << j
            elif ch != "0":
                raise ParseError("rows may contain only 0 and 1",
                                 line=i + 2, col=j + 1)
        rows.append(r)
    return validate(n, rows)


def format_tour(t: Tournament) -> str:
    """Serialize to .tour text (with trailing newline)."""
    out = [str(t.n)]
    for i in range(t.n):
        row = t.out_rows[i]
        out.append("".join("1" if (row >> j) & 1 else "0" for j in range(t.n)))
    return "\n".join(out) + "\n"


def read_tour(path: str | os.PathLike[str]) -> Tournament:
    with open(path, encoding="ascii") as fh:
        return parse_tour(fh.read())


def write_tour(t: Tournament, path: str | os.PathLike[str]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_tour(t))
