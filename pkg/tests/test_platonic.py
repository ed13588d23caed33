from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxcomb.errors import HypothesesNotMet
from coxcomb.platonic import GeometryFlags, is_platonic_ring, is_platonic_tuple, log_terminal
from coxcomb.ring import ExponentData
from oracles import exhaustive_platonic_ring, literal_platonic_set, reciprocal_sum_platonic

CX1 = GeometryFlags(almost_homogeneous=True, complexity_one=True, units_constant=True)


@pytest.mark.parametrize(
    "t, expected",
    [
        ((5, 3, 2), True),
        ((4, 3, 2), True),
        ((3, 3, 2), True),
        ((17, 2, 2), True),
        ((9, 7, 1), True),
        ((3, 3, 3), False),
        ((6, 3, 2), False),
        ((4, 3, 2, 1, 1), True),
        ((4, 3, 2, 2), False),
        ((2, 5, 3), True),
        ((7,), True),
        ((), True),
    ],
)
def test_platonic_tuple(t, expected):
    assert is_platonic_tuple(t) is expected


def test_platonic_tuple_rejects_nonpositive():
    with pytest.raises(ValueError):
        is_platonic_tuple((3, 0, 2))


def test_tuple_test_agrees_with_reciprocal_sum():
    for L in range(1, 5):
        for t in product(range(1, 9), repeat=L):
            assert is_platonic_tuple(t) == reciprocal_sum_platonic(t)


def test_literal_pattern_set_small():
    lit = literal_platonic_set(4, 6)
    for L in range(1, 5):
        for t in product(range(1, 7), repeat=L):
            s = tuple(sorted(t, reverse=True))
            assert is_platonic_tuple(t) == (s in lit)


@given(st.lists(st.integers(1, 12), min_size=0, max_size=6), st.integers(0, 3), st.randoms())
def test_invariant_under_permutation_and_ones(t, ones, rnd):
    base = is_platonic_tuple(t)
    shuffled = list(t)
    rnd.shuffle(shuffled)
    assert is_platonic_tuple(shuffled) == base
    assert is_platonic_tuple(list(t) + [1] * ones) == base


@pytest.mark.parametrize(
    "vectors, platonic, witness",
    [
        (((7, 7), (9,)), True, None),
        (((3, 3), (3, 3), (3, 3)), False, (3, 3, 3)),
        (((5, 1), (3,), (2,)), True, None),
        (((2,), (2,), (2,), (2,)), False, (2, 2, 2, 2)),
        (((4,),), True, None),
    ],
)
def test_platonic_ring(vectors, platonic, witness):
    v = is_platonic_ring(ExponentData(vectors))
    assert v.platonic is platonic
    assert v.witness == witness


def test_witness_is_a_failing_choice():
    exps = ExponentData(((1, 4), (3, 1), (2, 3, 1)))
    v = is_platonic_ring(exps)
    assert not v.platonic
    assert not is_platonic_tuple(v.witness)
    assert all(w in vec for w, vec in zip(v.witness, exps.vectors))


def test_ring_matches_exhaustive_small():
    vecs = [(1,), (2,), (3,), (5,), (2, 3), (1, 4), (6,), (3, 3)]
    for k in range(1, 5):
        for combo in product(vecs, repeat=k):
            ok, _ = exhaustive_platonic_ring(combo, is_platonic_tuple)
            assert is_platonic_ring(ExponentData(combo)).platonic == ok


def test_log_terminal_spherical_ignores_exponents():
    flags = GeometryFlags(spherical=True, units_constant=True)
    for exps in (None, ExponentData(((3, 3), (3, 3), (3, 3))), ExponentData(((9,), (9,), (9,)))):
        rep = log_terminal(exps, flags)
        assert rep.verdict is True
        assert rep.fano_type is None


def test_log_terminal_threes_configuration():
    rep = log_terminal(ExponentData(((3, 3), (3, 3), (3, 3))), CX1)
    assert rep.verdict is False
    assert rep.witness == (3, 3, 3)
    assert "not" in rep.basis


def test_log_terminal_e8_triple():
    rep = log_terminal(ExponentData(((5,), (3,), (2,))), CX1)
    assert rep.verdict is True


def test_fano_type_follows_verdict():
    flags = GeometryFlags(
        almost_homogeneous=True, complexity_one=True, units_constant=True, q_factorial_projective=True
    )
    assert log_terminal(ExponentData(((5,), (3,), (2,))), flags).fano_type is True
    assert log_terminal(ExponentData(((6,), (3,), (2,))), flags).fano_type is False


@pytest.mark.parametrize(
    "flags",
    [
        GeometryFlags(),
        GeometryFlags(almost_homogeneous=True, complexity_one=True),
        GeometryFlags(complexity_one=True, units_constant=True),
        GeometryFlags(spherical=True),
    ],
)
def test_hypotheses_not_met(flags):
    with pytest.raises(HypothesesNotMet):
        log_terminal(ExponentData(((5,), (3,), (2,))), flags)


def test_flags_exclusive():
    with pytest.raises(ValueError):
        GeometryFlags(spherical=True, complexity_one=True)
