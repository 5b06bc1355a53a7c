"""Finite magmas as Cayley tables.

Elements are the indices ``0..n-1``; ``table[a][b]`` is the product ``a*b``
(row = left operand).  Everything here is immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

MAX_ORDER = 64

ElementSet = frozenset  # subsets of the universe are plain frozensets of ints
Permutation = tuple  # perm[a] is the image of a


class MagmaError(ValueError):
    pass


class ParseError(MagmaError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OrderTooLarge(MagmaError):
    pass


@dataclass(frozen=True)
class Magma:
    table: tuple

    def __init__(self, table: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n < 1:
            raise MagmaError("a magma needs at least one element")
        if n > MAX_ORDER:
            raise OrderTooLarge(f"order {n} exceeds maximum {MAX_ORDER}")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MagmaError(f"row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise MagmaError(f"entry {v} out of range at row {i}")
        object.__setattr__(self, "table", rows)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def __len__(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        return f"Magma({[list(r) for r in self.table]})"

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    def check_element(self, a: int) -> int:
        if not 0 <= a < len(self.table):
            raise IndexError(f"element {a} out of range for order {len(self.table)}")
        return a

    def flat(self) -> tuple:
        return tuple(v for row in self.table for v in row)

    @cached_property
    def columns(self) -> tuple:
        return tuple(zip(*self.table))

    def relabel(self, perm: Sequence[int]) -> "Magma":
        """The isomorphic copy in which element ``a`` is renamed ``perm[a]``."""
        n = self.order
        inv = [0] * n
        for a, pa in enumerate(perm):
            inv[pa] = a
        t = self.table
        return Magma([[perm[t[inv[i]][inv[j]]] for j in range(n)] for i in range(n)])

    def submagma(self, elements: Iterable[int]) -> "Magma":
        """Restrict the table to a closed subset, relabelled in sorted order."""
        elems = sorted(elements)
        index = {a: i for i, a in enumerate(elems)}
        try:
            return Magma([[index[self.table[a][b]] for b in elems] for a in elems])
        except KeyError:
            raise MagmaError(f"subset {elems} is not closed under the product") from None


def product(m: Magma, a: int, b: int) -> int:
    m.check_element(a)
    m.check_element(b)
    return m.table[a][b]


def parse_magma(text: str) -> Magma:
    """Read the Cayley-table text format.

    ``#`` lines are comments; the first remaining line is ``n``, followed by
    exactly ``n`` rows of ``n`` integers.
    """
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("missing header line with the order")
    hdr_no, hdr = lines[0]
    try:
        n = int(hdr)
    except ValueError:
        raise ParseError(f"malformed header {hdr!r}", hdr_no) from None
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", hdr_no)
    if n > MAX_ORDER:
        raise ParseError(f"order {n} exceeds maximum {MAX_ORDER}", hdr_no)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}",
                         body[-1][0] if body else hdr_no)
    rows = []
    for r, (no, ln) in enumerate(body):
        row = []
        for tok in ln.split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"non-integer token {tok!r}", no) from None
            if not 0 <= v < n:
                raise ParseError(f"entry {v} out of range at row {r}", no)
            row.append(v)
        if len(row) != n:
            raise ParseError(f"row {r} has {len(row)} entries, expected {n}", no)
        rows.append(row)
    return Magma(rows)


def format_magma(m: Magma) -> str:
    return f"{m.order}\n" + "".join(" ".join(map(str, row)) + "\n" for row in m.table)


def read_magma(path) -> Magma:
    with open(path, encoding="utf-8") as fh:
        return parse_magma(fh.read())


def _invariants(m: Magma) -> list:
    t = m.table
    cols = m.columns
    flat = m.flat()
    return [
        (t[a][a] == a, len(set(t[a])), len(set(cols[a])), flat.count(a),
         sum(1 for x in m.elements if t[x][x] == a),
         sorted(flat.count(v) for v in t[a]))
        for a in m.elements
    ]


def isomorphic(m1: Magma, m2: Magma) -> Optional[Permutation]:
    """Find ``p`` with ``p(a*b) = p(a)*p(b)``, or ``None``.

    Backtracking over images, candidates restricted to elements with the same
    invariant vector.
    """
    n = m1.order
    if m2.order != n:
        return None
    inv1, inv2 = _invariants(m1), _invariants(m2)
    if sorted(inv1) != sorted(inv2):
        return None
    t1, t2 = m1.table, m2.table
    cands = [[b for b in range(n) if inv2[b] == inv1[a]] for a in range(n)]
    perm = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        # every product among 0..k whose value is also mapped must agree
        for x in range(k + 1):
            for y in range(k + 1):
                v = t1[x][y]
                if v <= k and perm[v] != t2[perm[x]][perm[y]]:
                    return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return True
        for b in cands[k]:
            if used[b]:
                continue
            perm[k] = b
            used[b] = True
            if consistent(k) and search(k + 1):
                return True
            used[b] = False
        perm[k] = -1
        return False

    return tuple(perm) if search(0) else None


def direct_product(m1: Magma, m2: Magma, max_order: int = MAX_ORDER) -> Magma:
    """Componentwise product; the pair ``(a1, a2)`` is encoded ``a1*n2 + a2``."""
    n1, n2 = m1.order, m2.order
    if n1 * n2 > max_order:
        raise OrderTooLarge(f"product order {n1 * n2} exceeds maximum {max_order}")
    t1, t2 = m1.table, m2.table
    return Magma([
        [t1[a1][b1] * n2 + t2[a2][b2] for b1 in range(n1) for b2 in range(n2)]
        for a1 in range(n1) for a2 in range(n2)
    ])


def cyclic_ag_group(n: int) -> Magma:
    """``(Z_n, a*b = b - a)``, an AG-group with left identity 0."""
    return Magma([[(b - a) % n for b in range(n)] for a in range(n)])


T1 = Magma([[0]])
S2 = Magma([[0, 0], [0, 1]])
Z2 = Magma([[0, 1], [1, 0]])
Z3g = cyclic_ag_group(3)
R2 = Magma([[0, 1], [0, 1]])
K2 = Magma([[0, 0], [0, 0]])
C3 = Magma([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
P6 = direct_product(S2, Z3g)

FIXTURES = {"T1": T1, "S2": S2, "Z2": Z2, "Z3g": Z3g, "R2": R2, "K2": K2,
            "C3": C3, "P6": P6}
