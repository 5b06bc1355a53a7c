"""Equivalence relations on ``0..n-1`` in least-representative form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller index as root so roots are least members
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def reps(self) -> tuple:
        return tuple(self.find(x) for x in range(len(self.parent)))


@dataclass(frozen=True)
class Partition:
    """``reps[a]`` is the least member of the block containing ``a``."""
    reps: tuple

    def __post_init__(self):
        reps = tuple(self.reps)
        object.__setattr__(self, "reps", reps)
        for a, r in enumerate(reps):
            if not 0 <= r <= a or reps[r] != r:
                raise ValueError(f"not a least-representative sequence: {reps}")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        uf = UnionFind(n)
        seen = set()
        for block in blocks:
            block = list(block)
            for x in block:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} out of range for order {n}")
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
            for x in block[1:]:
                uf.union(block[0], x)
        return cls(uf.reps())

    @classmethod
    def from_key(cls, n: int, key: Callable[[int], object]) -> "Partition":
        first = {}
        return cls(tuple(first.setdefault(key(a), a) for a in range(n)))

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        return cls.from_key(len(labels), labels.__getitem__)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def order(self) -> int:
        return len(self.reps)

    def __len__(self) -> int:
        return len(self.reps)

    def related(self, a: int, b: int) -> bool:
        return self.reps[a] == self.reps[b]

    def block_of(self, a: int) -> frozenset:
        r = self.reps[a]
        return frozenset(x for x, y in enumerate(self.reps) if y == r)

    def blocks(self) -> list:
        out = {}
        for x, r in enumerate(self.reps):
            out.setdefault(r, []).append(x)
        return [out[r] for r in sorted(out)]

    @property
    def num_blocks(self) -> int:
        return sum(1 for a, r in enumerate(self.reps) if a == r)

    def is_identity(self) -> bool:
        return all(a == r for a, r in enumerate(self.reps))

    def is_universal(self) -> bool:
        return all(r == 0 for r in self.reps)

    def meet(self, other: "Partition") -> "Partition":
        self._same_universe(other)
        return Partition.from_key(self.order, lambda a: (self.reps[a], other.reps[a]))

    def join(self, other: "Partition") -> "Partition":
        self._same_universe(other)
        uf = UnionFind(self.order)
        for a in range(self.order):
            uf.union(a, self.reps[a])
            uf.union(a, other.reps[a])
        return Partition(uf.reps())

    def refines(self, other: "Partition") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        self._same_universe(other)
        return all(other.reps[a] == other.reps[r] for a, r in enumerate(self.reps))

    __le__ = refines

    def pairs(self) -> Iterator[tuple]:
        for a in range(self.order):
            for b in range(a + 1, self.order):
                if self.reps[a] == self.reps[b]:
                    yield (a, b)

    def _same_universe(self, other: "Partition") -> None:
        if other.order != self.order:
            raise ValueError(f"universe size mismatch: {self.order} vs {other.order}")

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks()) + "]"


def restricted_growth_strings(n: int) -> Iterator[tuple]:
    """All set partitions of ``0..n-1`` as restricted growth strings, lex order."""
    if n == 0:
        yield ()
        return
    s = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(s)
            return
        for v in range(top + 2):
            s[i] = v
            yield from rec(i + 1, max(top, v))

    s[0] = 0
    yield from rec(1, 0)


def all_partitions(n: int) -> Iterator[Partition]:
    for rgs in restricted_growth_strings(n):
        yield Partition.from_labels(rgs)
