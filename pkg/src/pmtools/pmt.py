"""Reading and writing the ``.pmt`` rank-table text format.

::

    pmt 2
    k 2          (optional)
    0 0
    1 2
    2 2
    3 3

One ``mask rank`` line per subset, masks in increasing decimal order.
"""

from __future__ import annotations

from pathlib import Path

from .core import Polymatroid


class PmtFormatError(ValueError):
    pass


def dumps(p: Polymatroid, groups: list[list[int]] | None = None) -> str:
    lines = [f"pmt {p.n}"]
    if p.k is not None:
        lines.append(f"k {p.k}")
    lines.extend(f"{m} {v}" for m, v in enumerate(p.rank))
    if groups is not None:
        lines.append(format_groups(groups))
    return "\n".join(lines) + "\n"


def format_groups(groups) -> str:
    parts = [f"e{i}=[{','.join(str(x) for x in g)}]" for i, g in enumerate(groups)]
    return "groups: " + " ".join(parts)


def loads(text: str) -> Polymatroid:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("groups:")]
    if not rows:
        raise PmtFormatError("empty input")
    head = rows[0].split()
    if len(head) != 2 or head[0] != "pmt":
        raise PmtFormatError(f"bad header line {rows[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise PmtFormatError(f"bad ground-set size {head[1]!r}") from None
    body = rows[1:]
    k = None
    if body and body[0].split()[0] == "k":
        parts = body[0].split()
        if len(parts) != 2:
            raise PmtFormatError(f"bad k line {body[0]!r}")
        k = int(parts[1])
        body = body[1:]
    size = 1 << n
    if len(body) != size:
        raise PmtFormatError(f"expected {size} mask lines, found {len(body)}")
    table = []
    for expect, line in enumerate(body):
        parts = line.split()
        if len(parts) != 2:
            raise PmtFormatError(f"bad table line {line!r}")
        mask, value = int(parts[0]), int(parts[1])
        if mask != expect:
            raise PmtFormatError(f"mask {expect} missing or out of order (found {mask})")
        table.append(value)
    return Polymatroid(n, tuple(table), k)


def read(path: str | Path) -> Polymatroid:
    return loads(Path(path).read_text())


def write(p: Polymatroid, path: str | Path, groups=None) -> None:
    Path(path).write_text(dumps(p, groups))
