"""Inverse sets ``V(a)``, regularity, unique inverses and complete inverseness."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Magma, MagmaError


class NotInverseGroupoid(MagmaError):
    pass


@dataclass(frozen=True)
class InverseProfile:
    inverse_sets: tuple  # of frozensets, indexed by element
    regular: bool
    unique: bool
    completely_inverse: bool

    def as_dict(self) -> dict:
        return {
            "inverse_sets": [sorted(v) for v in self.inverse_sets],
            "regular": self.regular,
            "unique": self.unique,
            "completely_inverse": self.completely_inverse,
        }


def inverse_set(m: Magma, a: int) -> frozenset:
    """All ``s`` with ``(a*s)*a = a`` and ``(s*a)*s = s``."""
    m.check_element(a)
    t = m.table
    return frozenset(s for s in m.elements
                     if t[t[a][s]][a] == a and t[t[s][a]][s] == s)


@lru_cache(maxsize=4096)
def _inverse_map(m: Magma) -> tuple:
    sets = [inverse_set(m, a) for a in m.elements]
    bad = [a for a, v in enumerate(sets) if len(v) != 1]
    if bad:
        a = bad[0]
        raise NotInverseGroupoid(f"element {a} has {len(sets[a])} inverses, expected exactly 1")
    return tuple(next(iter(v)) for v in sets)


def inverse_map(m: Magma) -> tuple:
    """``a -> a^-1`` for every element; validated once per magma and cached."""
    return _inverse_map(m)


def unique_inverse(m: Magma, a: int) -> int:
    m.check_element(a)
    return _inverse_map(m)[a]


def inverse_profile(m: Magma) -> InverseProfile:
    # computed from scratch, independent of any classification
    sets = tuple(inverse_set(m, a) for a in m.elements)
    regular = all(sets)
    unique = all(len(v) == 1 for v in sets)
    t = m.table
    completely = unique and all(
        t[a][b] == t[b][a] for a, v in enumerate(sets) for b in v)
    return InverseProfile(sets, regular, unique, completely)
