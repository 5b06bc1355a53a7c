"""Identities checked by exhaustive quantification, and class labels."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import Magma
from .inverses import inverse_profile


class LawId(enum.Enum):
    LEFT_INVERTIVE = "left-invertive"   # xy.z = zy.x
    MEDIAL = "medial"                   # ab.cd = ac.bd
    AG_STAR_STAR = "ag-star-star"       # x.yz = y.xz
    PARAMEDIAL = "paramedial"           # ab.cd = db.ca
    E_STAR = "e-star"                   # e.ab = ea.b, e idempotent
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    IDEMPOTENT_LAW = "idempotent"


class ClassLabel(enum.Enum):
    AG = "ag"
    AG_SS = "ag-star-star"
    AG_BAND = "ag-band"
    AG_SEMILATTICE = "ag-semilattice"
    AG_GROUP = "ag-group"
    REGULAR = "regular"
    INVERSE_AG_SS = "inverse-ag-star-star"
    COMPLETELY_INVERSE_AG_SS = "completely-inverse-ag-star-star"


@dataclass(frozen=True)
class LawResult:
    holds: bool
    counterexample: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


# law -> (arity, lhs, rhs); t is the table
_SIDES = {
    LawId.LEFT_INVERTIVE: (3, lambda t, x, y, z: t[t[x][y]][z], lambda t, x, y, z: t[t[z][y]][x]),
    LawId.MEDIAL: (4, lambda t, a, b, c, d: t[t[a][b]][t[c][d]], lambda t, a, b, c, d: t[t[a][c]][t[b][d]]),
    LawId.AG_STAR_STAR: (3, lambda t, x, y, z: t[x][t[y][z]], lambda t, x, y, z: t[y][t[x][z]]),
    LawId.PARAMEDIAL: (4, lambda t, a, b, c, d: t[t[a][b]][t[c][d]], lambda t, a, b, c, d: t[t[d][b]][t[c][a]]),
    LawId.E_STAR: (3, lambda t, e, a, b: t[e][t[a][b]], lambda t, e, a, b: t[t[e][a]][b]),
    LawId.COMMUTATIVE: (2, lambda t, x, y: t[x][y], lambda t, x, y: t[y][x]),
    LawId.ASSOCIATIVE: (3, lambda t, x, y, z: t[t[x][y]][z], lambda t, x, y, z: t[x][t[y][z]]),
    LawId.IDEMPOTENT_LAW: (1, lambda t, x: t[x][x], lambda t, x: x),
}


def law_sides(law: LawId):
    return _SIDES[law]


def check_identity(m: Magma, law: LawId) -> LawResult:
    """Report the lexicographically first failing assignment, if any."""
    arity, lhs, rhs = _SIDES[law]
    t = m.table
    n = m.order
    domains = [range(n)] * arity
    if law is LawId.E_STAR:
        domains[0] = sorted(idempotents(m))
    for args in product(*domains):
        if lhs(t, *args) != rhs(t, *args):
            return LawResult(False, args)
    return LawResult(True)


def holds(m: Magma, law: LawId) -> bool:
    return check_identity(m, law).holds


def idempotents(m: Magma) -> frozenset:
    t = m.table
    return frozenset(a for a in m.elements if t[a][a] == a)


def left_identities(m: Magma) -> list:
    t = m.table
    return [e for e in m.elements if all(t[e][x] == x for x in m.elements)]


def right_identities(m: Magma) -> list:
    t = m.table
    return [e for e in m.elements if all(t[x][e] == x for x in m.elements)]


def is_ag_group(m: Magma) -> bool:
    """AG-groupoid with a left identity in which every element has a left inverse."""
    if not holds(m, LawId.LEFT_INVERTIVE):
        return False
    t = m.table
    for e in left_identities(m):
        if all(any(t[x][a] == e for x in m.elements) for a in m.elements):
            return True
    return False


def is_semilattice(m: Magma) -> bool:
    return all(holds(m, law) for law in
               (LawId.COMMUTATIVE, LawId.ASSOCIATIVE, LawId.IDEMPOTENT_LAW))


def classify(m: Magma) -> frozenset:
    labels = set()
    if not holds(m, LawId.LEFT_INVERTIVE):
        return frozenset()
    labels.add(ClassLabel.AG)
    ag_ss = holds(m, LawId.AG_STAR_STAR)
    if ag_ss:
        labels.add(ClassLabel.AG_SS)
    if holds(m, LawId.IDEMPOTENT_LAW):
        labels.add(ClassLabel.AG_BAND)
        if holds(m, LawId.COMMUTATIVE):
            labels.add(ClassLabel.AG_SEMILATTICE)
    if is_ag_group(m):
        labels.add(ClassLabel.AG_GROUP)
    # regularity is defined for any AG-groupoid, not only AG**
    prof = inverse_profile(m)
    if prof.regular:
        labels.add(ClassLabel.REGULAR)
        if ag_ss and prof.unique:
            labels.add(ClassLabel.INVERSE_AG_SS)
            if prof.completely_inverse:
                labels.add(ClassLabel.COMPLETELY_INVERSE_AG_SS)
    return frozenset(labels)


def is_completely_inverse(m: Magma) -> bool:
    return (holds(m, LawId.LEFT_INVERTIVE) and holds(m, LawId.AG_STAR_STAR)
            and inverse_profile(m).completely_inverse)


def label_names(labels) -> list:
    return [lab.name for lab in ClassLabel if lab in labels]
