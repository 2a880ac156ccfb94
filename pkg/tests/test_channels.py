from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zecomm import reference
from zecomm.channels import (
    IndexSpace,
    channel_from_json,
    channel_to_json,
    identity_channel,
    make_channel,
    make_mm,
    make_nm,
    mm_block_anchor,
    mm_block_of,
    pi_hat,
    pi_perm,
    sample_output,
    tensor_channels,
    validate_channel,
)
from zecomm.numeric import RATIONAL


def test_index_space_roundtrip():
    space = IndexSpace((4, 3), offsets=(1, 0))
    assert space.size == 12
    for flat in range(space.size):
        assert space.flatten(space.unflatten(flat)) == flat
    assert space.unflatten(0) == (1, 0)
    with pytest.raises(ValueError):
        space.flatten((0, 0))  # below the display offset
    with pytest.raises(ValueError):
        space.unflatten(12)


def test_pi_perm_values_and_bijection():
    assert pi_perm(3, 1, 1) == 2
    assert pi_perm(3, 1, 2) == 1
    for m in range(2, 9):
        for shift in range(m - 1):
            assert pi_perm(m, shift, 0) == 0
            image = {pi_perm(m, shift, i2) for i2 in range(m)}
            assert image == set(range(m))
    with pytest.raises(ValueError):
        pi_perm(3, 2, 0)
    with pytest.raises(ValueError):
        pi_perm(3, 0, 3)


def test_pi_hat():
    assert pi_hat(3, 0) == 0
    assert pi_hat(3, 1) == 2
    assert pi_hat(5, 3) == 2
    for m in range(2, 8):
        for u in range(m):
            assert (u + pi_hat(m, u)) % m == 0
    with pytest.raises(ValueError):
        pi_hat(3, 3)


def test_nm3_matches_reference_matrix():
    c = make_nm(3)
    for out_label in c.output_space.labels():
        support = set(map(tuple, reference.NM3_SUPPORT.get(out_label, [])))
        for in_label in c.input_space.labels():
            expect = reference.NM3_WEIGHT if in_label in support else Fraction(0)
            assert c.prob_labels(out_label, in_label) == expect


def test_mm3_matches_reference_matrix():
    c = make_mm(3)
    for out_label in c.output_space.labels():
        support = set(map(tuple, reference.MM3_SUPPORT.get(out_label, [])))
        for in_label in c.input_space.labels():
            expect = reference.MM3_WEIGHT if in_label in support else Fraction(0)
            assert c.prob_labels(out_label, in_label) == expect


@pytest.mark.parametrize("m", range(2, 9))
def test_nm_column_structure(m):
    c = make_nm(m)
    assert c.n_inputs == 2 * m
    assert c.n_outputs == (m + 1) * m
    for i in range(c.n_inputs):
        nonzero = [v for v in c.matrix[i] if v]
        assert len(nonzero) == m + 1
        assert all(v == Fraction(1, m + 1) for v in nonzero)


@pytest.mark.parametrize("m", range(2, 7))
def test_mm_column_and_row_structure(m):
    c = make_mm(m)
    n_first = m * (m - 1) + 1
    for i in range(c.n_inputs):
        nonzero = [v for v in c.matrix[i] if v]
        assert len(nonzero) == n_first
        assert all(v == Fraction(1, n_first) for v in nonzero)
    for o in range(c.n_outputs):
        hitters = [i for i in range(c.n_inputs) if c.prob(o, i)]
        assert len(hitters) == 2


def test_block_helpers():
    assert mm_block_anchor(3, 0) == 2
    assert mm_block_anchor(3, 2) == 6
    assert mm_block_of(3, 2) == 0
    assert mm_block_of(3, 5) == 1
    assert mm_block_of(3, 7) == 2


def test_n2_equals_m2_up_to_output_relabeling():
    n2, m2 = make_nm(2), make_mm(2)
    assert n2.n_inputs == m2.n_inputs == 4
    rows_n = sorted(tuple(n2.prob(o, i) for i in range(4)) for o in range(n2.n_outputs))
    rows_m = sorted(tuple(m2.prob(o, i) for i in range(4)) for o in range(m2.n_outputs))
    assert rows_n == rows_m


def test_make_channel_validates():
    space = IndexSpace((2,))
    with pytest.raises(ValueError):
        make_channel([[Fraction(1, 2), Fraction(1, 4)], [0, 1]], space, space)
    c = identity_channel(3)
    assert validate_channel(c) == []


def test_tensor_channels():
    eye = identity_channel(2)
    prod = tensor_channels(eye, eye)
    assert prod.n_inputs == prod.n_outputs == 4
    for i in range(4):
        assert prod.prob(i, i) == 1
    double = tensor_channels(make_nm(2), make_nm(2))
    assert double.prob_labels((1, 0, 1, 0), (0, 0, 0, 0)) == Fraction(1, 9)
    assert validate_channel(double) == []


def test_sample_output_identity_and_determinism():
    eye = identity_channel(8)
    assert sample_output(eye, 5, seed=123) == 5
    c = make_nm(3)
    draws = [sample_output(c, 0, seed=s) for s in range(50)]
    assert draws == [sample_output(c, 0, seed=s) for s in range(50)]
    with pytest.raises(ValueError):
        sample_output(eye, 8, seed=0)


def test_sample_output_frequencies():
    c = make_nm(3)
    support = set(c.support(0))
    assert len(support) == 4
    counts = {o: 0 for o in support}
    trials = 4000
    for s in range(trials):
        counts[sample_output(c, 0, seed=s)] += 1
    for o in support:
        assert abs(counts[o] / trials - 0.25) < 0.03


def test_channel_json_roundtrip():
    c = make_mm(3)
    again = channel_from_json(channel_to_json(c))
    assert again == c


@settings(max_examples=25, deadline=None)
@given(m=st.integers(2, 7))
def test_nm_column_stochastic_property(m):
    c = make_nm(m)
    for column in c.matrix:
        assert sum(column) == 1
