from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agmagma.core import (C3, K2, MAX_ORDER, P6, R2, S2, T1, Z2, Magma, MagmaError, OrderTooLarge,
                          ParseError, Z3g, cyclic_ag_group, direct_product, format_magma,
                          isomorphic, parse_magma, product)
from agmagma.laws import LawId, holds

import oracles


@st.composite
def magmas(draw, max_order=4):
    n = draw(st.integers(1, max_order))
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    return Magma(rows)


def test_parse_examples():
    assert parse_magma("2\n0 0\n0 1") == S2
    assert parse_magma("1\n0") == T1
    with pytest.raises(ParseError, match="entry 2 out of range at row 0"):
        parse_magma("2\n0 2\n0 1")


@pytest.mark.parametrize("text, line, fragment", [
    ("x\n0", 1, "malformed header"),
    ("2\n0 0", 2, "expected 2 rows"),
    ("2\n0 0\n0 a", 3, "non-integer token"),
    ("2\n0 0\n0 1 1", 3, "row 1 has 3 entries"),
    ("# only a comment\n", None, "missing header"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as exc:
        parse_magma(text)
    assert exc.value.line == line


def test_parse_skips_comments():
    assert parse_magma("# S2\n2\n# rows\n0 0\n0 1\n") == S2


def test_format_is_canonical():
    assert format_magma(Z3g) == "3\n0 1 2\n2 0 1\n1 2 0\n"


@given(magmas())
def test_parse_format_roundtrip(m):
    text = format_magma(m)
    assert parse_magma(text) == m
    assert format_magma(parse_magma(text)) == text


def test_closure_enforced():
    with pytest.raises(MagmaError):
        Magma([[0, 1], [2, 0]])
    with pytest.raises(MagmaError):
        Magma([])


def test_product_examples():
    # a*b = b - a mod 3
    assert product(Z3g, 1, 2) == 1
    assert all(Z3g(a, b) == (b - a) % 3 for a, b in cartesian(range(3), repeat=2))
    assert oracles.left_invertive(Z3g.table)
    assert product(S2, 1, 0) == 0
    assert product(T1, 0, 0) == 0
    with pytest.raises(IndexError):
        product(S2, 2, 0)


def test_isomorphic_examples():
    assert isomorphic(S2, S2) == (0, 1)
    swapped = Magma([[0, 1], [1, 1]])
    perm = isomorphic(S2, swapped)
    assert perm == (1, 0)
    for a, b in cartesian(range(2), repeat=2):
        assert perm[S2(a, b)] == swapped(perm[a], perm[b])
    assert isomorphic(S2, Z2) is None
    assert isomorphic(S2, C3) is None


@settings(max_examples=200)
@given(magmas(), st.randoms(use_true_random=False))
def test_isomorphic_witness_reproduces_table(m, rnd):
    perm = list(m.elements)
    rnd.shuffle(perm)
    other = m.relabel(perm)
    found = isomorphic(m, other)
    assert found is not None
    assert m.relabel(found) == other


@settings(max_examples=100)
@given(magmas(max_order=3), magmas(max_order=3))
def test_isomorphic_agrees_with_permutation_scan(m1, m2):
    from itertools import permutations
    expected = m1.order == m2.order and any(
        oracles.relabel(m1.table, p) == m2.table for p in permutations(range(m1.order)))
    assert (isomorphic(m1, m2) is not None) == expected


def test_direct_product_examples():
    for m in (S2, Z3g, C3, K2):
        assert isomorphic(direct_product(T1, m), m) is not None
    assert P6.order == 6
    s4 = direct_product(S2, S2)
    assert all(holds(s4, law) for law in (LawId.COMMUTATIVE, LawId.ASSOCIATIVE, LawId.IDEMPOTENT_LAW))
    # pair (a1, a2) is encoded a1*n2 + a2
    assert P6(1 * 3 + 2, 0 * 3 + 1) == (S2(1, 0)) * 3 + Z3g(2, 1)


def test_direct_product_order_guard():
    big = cyclic_ag_group(9)
    with pytest.raises(OrderTooLarge):
        direct_product(big, big)
    with pytest.raises(OrderTooLarge):
        direct_product(Z3g, Z3g, max_order=8)
    assert direct_product(Z3g, Z3g, max_order=9).order == 9
    assert MAX_ORDER == 64


EQUATIONAL = [LawId.LEFT_INVERTIVE, LawId.MEDIAL, LawId.AG_STAR_STAR, LawId.PARAMEDIAL]


def test_direct_product_preserves_identities(ci_labelled_upto3):
    small = [T1, S2, Z2, Z3g, R2, K2, C3] + [m for m in ci_labelled_upto3 if m.order <= 2]
    for m1 in small:
        for m2 in small:
            if m1.order * m2.order > 4 * 4:
                continue
            p = direct_product(m1, m2)
            for law in EQUATIONAL:
                if holds(m1, law) and holds(m2, law):
                    assert holds(p, law), (m1, m2, law)


def test_fixtures_match_repo_files():
    import pathlib
    from agmagma.core import FIXTURES, read_magma
    root = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    for name, m in FIXTURES.items():
        assert read_magma(root / f"{name}.cayley") == m
