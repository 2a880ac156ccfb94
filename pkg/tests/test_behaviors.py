from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zecomm.behaviors import (
    Behavior,
    Scenario,
    behavior_from_json,
    behavior_to_json,
    bell_value,
    conditional_bob,
    is_no_signaling,
    local_bound,
    make_behavior,
    make_bell_functional,
    make_extremal_box,
    make_jones_box,
    make_local_deterministic,
    make_rtilde_box,
    marginal_alice,
    marginal_bob,
    mix_behaviors,
    tensor_behaviors,
    uniform_behavior,
    validate_behavior,
)
from zecomm.numeric import RATIONAL, ZeroConditioningError


def test_scenario_validation():
    with pytest.raises(ValueError):
        Scenario(0, 2, 2, 2)


def test_extremal_box_support_pattern():
    box = make_extremal_box(3, 3)
    for x, y in box.inputs():
        for a, b in box.outputs():
            expect = Fraction(1, 3) if (b - a) % 3 == x * y else 0
            assert box.prob(x, y, a, b) == expect
    assert validate_behavior(box) == []
    ok, violation = is_no_signaling(box)
    assert ok and violation == 0


def test_extremal_box_is_pr_box_at_two():
    pr = make_extremal_box(2, 2)
    for x, y in pr.inputs():
        for a, b in pr.outputs():
            expect = Fraction(1, 2) if (a ^ b) == x * y else 0
            assert pr.prob(x, y, a, b) == expect


def test_extremal_box_bad_params():
    with pytest.raises(ValueError):
        make_extremal_box(3, 4)
    with pytest.raises(ValueError):
        make_extremal_box(2, 1)


def test_rtilde_entries():
    box = make_rtilde_box(3)
    # correlated except on equal nonzero inputs
    assert box.prob(0, 0, 0, 0) == Fraction(1, 2)
    assert box.prob(1, 1, 0, 1) == Fraction(1, 2)
    assert box.prob(1, 1, 0, 0) == 0
    assert box.prob(2, 1, 0, 1) == 0
    assert box.prob(2, 1, 1, 1) == Fraction(1, 2)
    assert validate_behavior(box) == []


def test_jones_box_generalizes_rtilde():
    q = [(i, i) for i in range(2, 4)]
    jones = make_jones_box(4, 4, q)
    rtilde = make_rtilde_box(4)
    assert jones.p == rtilde.p


def test_jones_box_invalid_q():
    with pytest.raises(ValueError):
        make_jones_box(3, 3, [(1, 1)])
    with pytest.raises(ValueError):
        make_jones_box(3, 3, [(0, 2)])


def test_local_deterministic_and_marginals():
    box = make_local_deterministic([0, 1], [1, 0], Scenario(2, 2, 2, 2))
    assert box.prob(0, 0, 0, 1) == 1
    assert box.prob(0, 0, 1, 1) == 0
    assert marginal_alice(box, 1, 1) == 1
    assert marginal_bob(box, 1, 0) == 1
    ok, _ = is_no_signaling(box)
    assert ok


def test_signaling_detected():
    # Alice's outcome copies Bob's input: maximally signaling
    beh = make_behavior(
        Scenario(2, 2, 2, 2), RATIONAL, lambda x, y, a, b: 1 if (a == y and b == 0) else 0
    )
    ok, violation = is_no_signaling(beh)
    assert not ok and violation == 1


def test_conditional_bob():
    pr = make_extremal_box(2, 2)
    assert conditional_bob(pr, 1, 1, 1, 0) == 1  # b = a xor xy is forced
    flat = uniform_behavior(Scenario(2, 2, 2, 2))
    assert conditional_bob(flat, 0, 1, 0, 0) == Fraction(1, 2)
    zero_box = make_local_deterministic([0, 0], [0, 0], Scenario(2, 2, 2, 2))
    with pytest.raises(ZeroConditioningError):
        conditional_bob(zero_box, 0, 0, 0, 1)


def test_mix_behaviors():
    pr = make_extremal_box(2, 2)
    flat = uniform_behavior(Scenario(2, 2, 2, 2))
    mixed = mix_behaviors([(Fraction(1, 2), pr), (Fraction(1, 2), flat)])
    assert mixed.prob(0, 0, 0, 0) == Fraction(3, 8)
    with pytest.raises(ValueError):
        mix_behaviors([(Fraction(1, 3), pr), (Fraction(1, 3), flat)])


def test_tensor_behaviors():
    pr = make_extremal_box(2, 2)
    prod = tensor_behaviors(pr, pr)
    s = prod.scenario
    assert (s.x_card, s.y_card, s.a_card, s.b_card) == (4, 4, 4, 4)
    # factorization at a sample point: (x,y,a,b) = (3,3,0,3) -> (1,1,0,1)x(1,1,0,1)
    assert prod.prob(3, 3, 0, 3) == pr.prob(1, 1, 0, 1) ** 2
    ok, violation = is_no_signaling(prod)
    assert ok and violation == 0


def test_bell_functional_chsh():
    s = Scenario(2, 2, 2, 2)
    chsh = make_bell_functional(s, lambda x, y, a, b: 1 if (a ^ b) == x * y else 0)
    assert local_bound(chsh) == 3
    assert bell_value(make_extremal_box(2, 2), chsh) == 4


def test_local_bound_limit():
    s = Scenario(8, 8, 8, 8)
    f = make_bell_functional(s, lambda x, y, a, b: 0)
    with pytest.raises(ValueError):
        local_bound(f, limit=10)


def test_validate_behavior_reports():
    bad = Behavior(
        Scenario(1, 1, 1, 2),
        RATIONAL,
        ((((Fraction(1, 2), Fraction(1, 4)),),),),
    )
    report = validate_behavior(bad)
    assert any("normalization" in line for line in report)


def test_json_roundtrip(tmp_path):
    box = make_rtilde_box(3)
    data = behavior_to_json(box)
    again = behavior_from_json(data)
    assert again == box


def test_json_rejects_invalid():
    box = make_extremal_box(2, 2)
    data = behavior_to_json(box)
    data["p"][0][0][0][0] = "1/3"
    with pytest.raises(ValueError):
        behavior_from_json(data)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(2, 6), k=st.integers(2, 6))
def test_extremal_family_ns_property(m, k):
    if k > m:
        k = m
    box = make_extremal_box(m, k)
    assert validate_behavior(box) == []
    ok, violation = is_no_signaling(box)
    assert ok and violation == 0


@settings(max_examples=20, deadline=None)
@given(m1=st.integers(2, 5), m2=st.integers(2, 5), data=st.data())
def test_jones_family_ns_property(m1, m2, data):
    pairs = [(i, j) for i in range(1, m1) for j in range(1, m2) if (i, j) != (1, 1)]
    q = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    box = make_jones_box(m1, m2, q)
    assert validate_behavior(box) == []
    ok, violation = is_no_signaling(box)
    assert ok and violation == 0
