"""Finite AG-groupoids: identities, inverses, Green's relations and congruences."""
from .core import (C3, FIXTURES, K2, P6, R2, S2, T1, Z2, Magma, MagmaError, OrderTooLarge,
                   ParseError, Z3g, cyclic_ag_group, direct_product, format_magma, isomorphic,
                   parse_magma, product, read_magma)
from .laws import ClassLabel, LawId, LawResult, check_identity, classify, idempotents
from .partition import Partition

__version__ = "0.1.0"
