from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmwlk.rootsys import (
    CaseTag,
    InvalidN,
    PosRoot,
    classify,
    enumerate_roots,
    inner,
    minus_simple,
    plus_simple,
)


def test_basis_order_n3():
    assert enumerate_roots(3) == ((1, 2), (2, 3), (1, 3))


def test_basis_order_n4():
    assert enumerate_roots(4) == ((1, 2), (2, 3), (1, 3), (3, 4), (2, 4), (1, 4))


def test_invalid_n():
    with pytest.raises(InvalidN):
        enumerate_roots(1)


def test_label_round_trip():
    b = PosRoot(2, 5)
    assert b.label() == "w_{2,5}"
    assert PosRoot.parse(b.label()) == b
    with pytest.raises(ValueError):
        PosRoot.parse("w_{3,1}")


@pytest.mark.parametrize(
    "beta, k, tag, ip",
    [
        ((1, 2), 1, CaseTag.B_simple, 1),
        ((3, 4), 1, CaseTag.A_zero, 0),
        ((1, 3), 3, CaseTag.C_c, Fraction(-1, 2)),
        ((2, 4), 1, CaseTag.C_cprime, Fraction(-1, 2)),
        ((1, 3), 2, CaseTag.D_d, Fraction(1, 2)),
        ((2, 4), 2, CaseTag.D_dprime, Fraction(1, 2)),
        ((1, 4), 2, CaseTag.A_zero, 0),
    ],
)
def test_case_table(beta, k, tag, ip):
    beta = PosRoot(*beta)
    assert classify(beta, k) is tag
    assert inner(beta, k) == ip


def test_plus_minus_simple():
    assert plus_simple(PosRoot(1, 3), 3) == (1, 4)
    assert plus_simple(PosRoot(3, 5), 2) == (2, 5)
    assert minus_simple(PosRoot(1, 3), 2) == (1, 2)
    assert minus_simple(PosRoot(2, 4), 2) == (3, 4)
    with pytest.raises(ValueError):
        plus_simple(PosRoot(1, 2), 3)


_EXPECTED_IP = {
    CaseTag.A_zero: 0,
    CaseTag.B_simple: 1,
    CaseTag.C_c: Fraction(-1, 2),
    CaseTag.C_cprime: Fraction(-1, 2),
    CaseTag.D_d: Fraction(1, 2),
    CaseTag.D_dprime: Fraction(1, 2),
}


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_classification_agrees_with_inner_product(nk):
    n, k = nk
    roots = enumerate_roots(n)
    assert len(roots) == n * (n - 1) // 2
    for beta in roots:
        tag = classify(beta, k)
        assert inner(beta, k) == _EXPECTED_IP[tag]
        if tag in (CaseTag.C_c, CaseTag.C_cprime):
            assert plus_simple(beta, k).height == beta.height + 1
        if tag in (CaseTag.D_d, CaseTag.D_dprime):
            assert minus_simple(beta, k).height == beta.height - 1
