"""Exhaustive generation of small Cayley tables by class.

Cells are filled in row-major order with values ascending, so the labelled
stream comes out in lexicographic table order.  After each assignment every
now fully instantiated instance of the left invertive law (and of the AG**
law when the class needs it) that involves the new cell is checked.
Non-equational properties are applied to completed tables.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import islice, permutations
from typing import Iterator, Optional

from .core import Magma, OrderTooLarge, format_magma, parse_magma
from .laws import ClassLabel, classify

# exhaustive-completeness guards per requested class (None = ALL)
ORDER_GUARD = {
    None: 4,
    ClassLabel.AG: 4,
    ClassLabel.AG_BAND: 5,
    ClassLabel.AG_SEMILATTICE: 5,
    ClassLabel.REGULAR: 4,
    ClassLabel.AG_SS: 5,
    ClassLabel.INVERSE_AG_SS: 5,
    ClassLabel.COMPLETELY_INVERSE_AG_SS: 5,
    ClassLabel.AG_GROUP: 5,
}

_NEEDS_AG_SS = {ClassLabel.AG_SS, ClassLabel.INVERSE_AG_SS,
                ClassLabel.COMPLETELY_INVERSE_AG_SS, ClassLabel.AG_GROUP}


@dataclass(frozen=True)
class ModelQuery:
    order: int
    cls: Optional[ClassLabel] = None  # None means every magma
    up_to_iso: bool = False
    limit: Optional[int] = None


def _left_invertive_ok(t, n, i, j, v) -> bool:
    # (xy)z = (zy)x, new cell used as an inner product xy with x=i, y=j
    for z in range(n):
        lhs = t[v][z]
        if lhs < 0:
            continue
        zj = t[z][j]
        if zj < 0:
            continue
        rhs = t[zj][i]
        if rhs >= 0 and lhs != rhs:
            return False
    # new cell used as an outer product (xy)z with xy=i, z=j
    for x in range(n):
        tx = t[x]
        for y in range(n):
            if tx[y] != i:
                continue
            jy = t[j][y]
            if jy < 0:
                continue
            rhs = t[jy][x]
            if rhs >= 0 and rhs != v:
                return False
    return True


def _ag_ss_ok(t, n, i, j, v) -> bool:
    # x(yz) = y(xz), new cell as inner yz with y=i, z=j
    ti = t[i]
    for x in range(n):
        lhs = t[x][v]
        if lhs < 0:
            continue
        xj = t[x][j]
        if xj < 0:
            continue
        rhs = ti[xj]
        if rhs >= 0 and lhs != rhs:
            return False
    # new cell as outer x(w) with x=i, w=yz=j
    for y in range(n):
        ty = t[y]
        for z in range(n):
            if ty[z] != j:
                continue
            iz = ti[z]
            if iz < 0:
                continue
            rhs = ty[iz]
            if rhs >= 0 and rhs != v:
                return False
    return True


def _search(n: int, cls: Optional[ClassLabel]) -> Iterator[tuple]:
    """Yield labelled tables (as tuples of rows) satisfying the pruned laws."""
    checks = []
    if cls is not None:
        checks.append(_left_invertive_ok)
        if cls in _NEEDS_AG_SS:
            checks.append(_ag_ss_ok)
    band = cls in (ClassLabel.AG_BAND, ClassLabel.AG_SEMILATTICE)
    commutative = cls is ClassLabel.AG_SEMILATTICE
    t = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    last = len(cells)

    def rec(k: int):
        if k == last:
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[k]
        if band and i == j:
            values = (i,)
        elif commutative and j < i:
            values = (t[j][i],)
        else:
            values = range(n)
        for v in values:
            t[i][j] = v
            if all(ok(t, n, i, j, v) for ok in checks):
                yield from rec(k + 1)
        t[i][j] = -1

    yield from rec(0)


def canonical_form(m: Magma) -> Magma:
    """The lexicographically least table in the isomorphism class of ``m``."""
    best = m.flat()
    best_perm = tuple(m.elements)
    for perm in permutations(m.elements):
        cand = m.relabel(perm).flat()
        if cand < best:
            best, best_perm = cand, perm
    return m.relabel(best_perm)


def is_canonical(m: Magma) -> bool:
    n = m.order
    t = m.table
    flat = m.flat()
    for perm in permutations(range(n)):
        inv = [0] * n
        for a, pa in enumerate(perm):
            inv[pa] = a
        # compare cell by cell, stop at the first difference
        for idx in range(n * n):
            i, j = divmod(idx, n)
            c = perm[t[inv[i]][inv[j]]]
            if c != flat[idx]:
                if c < flat[idx]:
                    return False
                break
    return True


def _check_guard(q: ModelQuery) -> None:
    if q.order < 1:
        raise ValueError("order must be at least 1")
    guard = ORDER_GUARD[q.cls]
    if q.order > guard:
        name = q.cls.name if q.cls else "ALL"
        raise OrderTooLarge(f"order {q.order} exceeds the guard {guard} for class {name}")


def enumerate_models(q: ModelQuery) -> Iterator[Magma]:
    _check_guard(q)
    stream = (Magma(tab) for tab in _search(q.order, q.cls))
    if q.cls is not None:
        stream = (m for m in stream if q.cls in classify(m))
    if q.up_to_iso:
        stream = (m for m in stream if is_canonical(m))
    if q.limit is not None:
        stream = islice(stream, q.limit)
    return stream


def count_models(q: ModelQuery) -> int:
    if q.cls is None and not q.up_to_iso:
        _check_guard(q)
        total = q.order ** (q.order * q.order)
        return total if q.limit is None else min(total, q.limit)
    return sum(1 for _ in enumerate_models(q))


def write_text_stream(models, fh) -> int:
    """Concatenate Cayley text blocks separated by ``%`` lines."""
    count = 0
    for m in models:
        if count:
            fh.write("%\n")
        fh.write(format_magma(m))
        count += 1
    return count


def write_jsonl(models, fh) -> int:
    count = 0
    for m in models:
        fh.write(json.dumps({"order": m.order, "table": [list(r) for r in m.table]}) + "\n")
        count += 1
    return count


def split_text_stream(text: str) -> list:
    chunks = [c for c in text.split("%\n") if c.strip()]
    return [parse_magma(c) for c in chunks]
