"""Named polymatroids and matroids.

Element orders:

* ``U(r,n)``: ``0..n-1``.
* ``L2``: ``a`` (line), ``b``, ``c`` (points on ``a``).
* ``S(n)``: ``0..n-1``, all lines.
* ``A3``: ``a``, ``b`` (coplanar lines), ``c`` (point on ``b`` only).
* ``B3``: ``a`` (line), ``b``, ``c``, ``d`` (collinear points off ``a``).
* ``A4``: lines ``a``, ``b``, ``c``; ``a`` coplanar with ``b`` and ``c``, ``b`` skew to ``c``.
* ``B4``: points ``a1``, ``a2``, skew lines ``b``, ``c``.
* ``A5``: lines ``a``, ``b``, ``c``, point ``d``.
* ``A6``: four lines; rank |X|+2 on pairs and triples, 6 on the whole set.
  Only the pair/triple values are stated outright; singletons 2 and
  total 6 follow from "four lines in rank 6".
* ``Z3``: three pairwise coplanar lines ``a``, ``b``, ``c`` in rank 4.
* ``Z22``: lines ``a``, ``c``, points ``b1``, ``b2`` freely placed on the
  deleted line ``b`` of ``Z3``.
* ``MK4``: ``a..f`` with 3-point lines ade, bef, cdf, abc.
* ``RHO_A(mask)``: ``MK4`` plus ``|X & A|``; ``mask`` over ``a..f``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Polymatroid, mask_of, require_valid
from .ops import delete, principal_extension_polymatroid

MK4_LINES = (0b011001, 0b110010, 0b101100, 0b000111)  # ade, bef, cdf, abc
MK4_LABELS = "abcdef"


@dataclass(frozen=True)
class CatalogName:
    tag: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.tag == "S":
            return f"S:{self.params[0]}"
        if self.tag == "U":
            return f"U:{self.params[0]},{self.params[1]}"
        if self.tag == "RHO_A":
            return f"rhoA:{self.params[0]:#08b}"
        return self.tag


FIXED_NAMES = ("U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6", "Z3", "Z22", "MK4")


def parse_name(text: str) -> CatalogName:
    """Accepts ``A4``, ``S:5``, ``U:2,4``, ``rhoA:0b101100`` (or decimal)."""
    t = text.strip()
    upper = t.upper()
    if upper in FIXED_NAMES:
        return CatalogName(upper)
    m = re.fullmatch(r"S[:(]?(\d+)\)?", upper)
    if m:
        return CatalogName("S", (int(m.group(1)),))
    m = re.fullmatch(r"U[:(]?(\d+),(\d+)\)?", upper)
    if m:
        return CatalogName("U", (int(m.group(1)), int(m.group(2))))
    m = re.fullmatch(r"(?:RHOA|RHO_A)[:(]?(0B[01]+|\d+)\)?", upper)
    if m:
        return CatalogName("RHO_A", (int(m.group(1).lower(), 0),))
    raise ValueError(f"unknown catalog name {text!r}")


def uniform(r: int, n: int) -> Polymatroid:
    if not 0 <= r <= n:
        raise ValueError(f"U({r},{n}) needs 0 <= r <= n")
    return Polymatroid.from_function(n, lambda X: min(X.bit_count(), r), 1)


def spike_like(n: int) -> Polymatroid:
    if n < 2:
        raise ValueError("S(n) needs n >= 2")

    def f(X: int) -> int:
        c = X.bit_count()
        return c + 1 if 0 < c < n else c

    return Polymatroid.from_function(n, f, 2)


def mk4() -> Polymatroid:
    def f(X: int) -> int:
        c = X.bit_count()
        if c <= 2:
            return c
        if c == 3:
            return 2 if X in MK4_LINES else 3
        return 3

    return Polymatroid.from_function(6, f, 1)


def rho_A(A: int) -> Polymatroid:
    if A < 0 or A >> 6:
        raise ValueError("rho_A needs a mask over the six elements of M(K4)")
    m = mk4()
    return Polymatroid.from_function(6, lambda X: m.rank[X] + (X & A).bit_count(), 2)


def _table(n: int, ranks: dict[str, int], labels: str, k: int = 2) -> Polymatroid:
    """Build from a dict keyed by label strings; unspecified sets fail."""
    table = [0] * (1 << n)
    filled = {0}
    for key, v in ranks.items():
        X = mask_of(labels.index(ch) for ch in key)
        table[X] = v
        filled.add(X)
    missing = set(range(1 << n)) - filled
    if missing:
        raise ValueError(f"rank table missing masks {sorted(missing)}")
    return Polymatroid(n, tuple(table), k)


def _from_rule(n: int, rule, k: int = 2) -> Polymatroid:
    return Polymatroid.from_function(n, rule, k)


def _l2() -> Polymatroid:
    # a line with points b, c on it
    return _from_rule(3, lambda X: min(2, 2 * (X & 1) + (X >> 1 & 1) + (X >> 2 & 1)))


def _a3() -> Polymatroid:
    return _table(3, {"a": 2, "b": 2, "c": 1, "ab": 3, "ac": 3, "bc": 2, "abc": 3}, "abc")


def _b3() -> Polymatroid:
    def rule(X: int) -> int:
        pts = (X >> 1).bit_count()
        if X & 1:
            return 2 if pts == 0 else 3
        return min(pts, 2)

    return _from_rule(4, rule)


def _a4() -> Polymatroid:
    return _table(3, {"a": 2, "b": 2, "c": 2, "ab": 3, "ac": 3, "bc": 4, "abc": 4}, "abc")


def _b4() -> Polymatroid:
    # labels: p=a1, q=a2, b, c
    return _table(
        4,
        {
            "p": 1, "q": 1, "b": 2, "c": 2,
            "pq": 2, "pb": 3, "qb": 3, "pc": 3, "qc": 3, "bc": 4,
            "pqb": 3, "pqc": 3, "pbc": 4, "qbc": 4, "pqbc": 4,
        },
        "pqbc",
    )


def _a5() -> Polymatroid:
    def rule(X: int) -> int:
        lines = (X & 0b111).bit_count()
        pt = X >> 3 & 1
        if lines >= 2:
            return min(2 * lines, 5)
        return 2 * lines + pt

    return _from_rule(4, rule)


def _a6() -> Polymatroid:
    def rule(X: int) -> int:
        c = X.bit_count()
        return {0: 0, 1: 2, 2: 4, 3: 5, 4: 6}[c]

    return _from_rule(4, rule)


def _z3() -> Polymatroid:
    return _from_rule(3, lambda X: {0: 0, 1: 2, 2: 3, 3: 4}[X.bit_count()])


def _z22() -> Polymatroid:
    z3 = _z3()
    b = 1 << 1
    ext = principal_extension_polymatroid(z3, b, 1)
    ext = principal_extension_polymatroid(ext, b, 1)
    return delete(ext, b).with_k(2)


def build(name: CatalogName | str) -> Polymatroid:
    if isinstance(name, str):
        name = parse_name(name)
    tag = name.tag
    if tag == "U":
        p = uniform(*name.params)
    elif tag == "S":
        p = spike_like(name.params[0])
    elif tag == "RHO_A":
        p = rho_A(name.params[0])
    elif tag == "U24":
        p = uniform(2, 4)
    elif tag == "MK4":
        p = mk4()
    else:
        makers = {"L2": _l2, "A3": _a3, "B3": _b3, "A4": _a4, "B4": _b4,
                  "A5": _a5, "A6": _a6, "Z3": _z3, "Z22": _z22}
        if tag not in makers:
            raise ValueError(f"unknown catalog tag {tag!r}")
        p = makers[tag]()
    return require_valid(p)


# one representative per isomorphism class of rho_A, keyed by a description
RHO_A_REPRESENTATIVES: dict[str, int] = {
    "|A|=0": 0,
    "|A|=1": 0b000001,                       # {a}
    "|A|=2 flat": 0b100001,                  # {a,f}
    "|A|=2 non-flat": 0b000011,              # {a,b}
    "|A|=3 circuit": 0b000111,               # {a,b,c}
    "|A|=3 complement circuit": 0b111000,    # {d,e,f}
    "|A|=3 neither": 0b001011,               # {a,b,d}
    "|A|=4 complement flat": 0b011110,       # {b,c,d,e}
    "|A|=4 complement non-flat": 0b111100,   # {c,d,e,f}
    "|A|=5": 0b111110,
    "|A|=6": 0b111111,
}


def catalog_all(max_spike: int = 7) -> list[tuple[str, Polymatroid]]:
    if max_spike < 2:
        raise ValueError("max_spike must be at least 2")
    out = [(nm, build(nm)) for nm in FIXED_NAMES]
    out += [(f"S:{n}", build(CatalogName("S", (n,)))) for n in range(2, max_spike + 1)]
    out += [(f"rhoA[{desc}]", build(CatalogName("RHO_A", (A,)))) for desc, A in RHO_A_REPRESENTATIVES.items()]
    return out


THEOREM_6_1_FIXED = ("U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6")
