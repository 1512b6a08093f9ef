import random

import pytest
from hypothesis import given, settings

from thompson.addresses import ROOT, completion
from thompson.elements import (
    IDENTITY,
    Element,
    apply_to_address,
    commutator,
    compose,
    conjugate,
    cycle,
    cycles,
    equals,
    invert,
    is_small_support,
    make_element,
    reduce,
    support_cones,
    swap,
)
from thompson.errors import (
    AddressTooShort,
    IncompleteDomain,
    IncompleteRange,
    NotBijective,
    NotIncomparable,
    TooShort,
)

from conftest import elements, incomparable_triples


def test_make_element_reduces_to_identity():
    g = make_element([("0", "0"), ("10", "10"), ("11", "11")])
    assert g.pairs == [(ROOT, ROOT)]
    assert g.is_identity()


def test_make_element_keeps_reduced_input():
    pairs = [("00", "01"), ("01", "00"), ("1", "1")]
    assert make_element(pairs).pairs == pairs
    inf = [("0", "00"), ("10", "01"), ("11", "1")]
    assert make_element(inf).pairs == inf


@pytest.mark.parametrize("pairs, error", [
    ([("0", "0"), ("11", "1")], IncompleteDomain),
    ([("0", "0"), ("1", "11")], IncompleteRange),
    ([("0", "0"), ("1", "0")], NotBijective),
])
def test_make_element_errors(pairs, error):
    with pytest.raises(error):
        make_element(pairs)


def test_reduce_examples():
    g = Element(("00", "01", "1"), ("00", "01", "1"))
    assert reduce(g).pairs == [(ROOT, ROOT)]
    h = Element(("00", "01", "10", "11"), ("100", "101", "0", "11"))
    assert reduce(h).pairs == [("0", "10"), ("10", "0"), ("11", "11")]


def _brute_apply(pairs, addr):
    for d, r in pairs:
        if addr.startswith(d):
            return r + addr[len(d):]
    raise AssertionError("address not covered")


def test_reduce_agrees_pointwise():
    pairs = [("00", "100"), ("01", "101"), ("10", "0"), ("11", "11")]
    g = make_element(pairs)
    for i in range(16):
        addr = format(i, "04b")
        assert apply_to_address(g, addr) == _brute_apply(pairs, addr)


@given(elements())
def test_reduce_idempotent_and_sibling_free(g):
    assert reduce(reduce(g)) == reduce(g) == g
    m = g.mapping()
    for d, r in m.items():
        if d.endswith("0") and r.endswith("0"):
            assert m.get(d[:-1] + "1") != r[:-1] + "1"


def test_three_cycle_product_identities():
    product = compose(cycle(["00", "100", "1100"]), cycle(["00", "100", "1110"]))
    assert product == compose(swap("00", "1110"), swap("100", "1100"))
    assert product == cycles([["00", "1110"], ["100", "1100"]])
    q = conjugate(product, cycle(["00", "100", "1100"]))
    assert q == compose(swap("00", "1100"), swap("100", "1110"))


def test_compose_identity_and_inverse():
    g = cycle(["00", "100", "1100"])
    assert compose(IDENTITY, g) == g == compose(g, IDENTITY)
    assert compose(g, invert(g)).is_identity()
    assert invert(g) == cycle(["00", "1100", "100"])
    assert invert(IDENTITY) == IDENTITY


def test_right_action_convention():
    g, h = swap("00", "01"), swap("01", "1")
    # 00 goes to 01 under g, then to 1 under h
    assert apply_to_address(compose(g, h), "00") == "1"
    assert apply_to_address(g * h, "00") == "1"


@settings(max_examples=150)
@given(elements(), elements(), elements())
def test_group_axioms(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(g, invert(g)) == IDENTITY == compose(invert(g), g)
    assert compose(IDENTITY, g) == g == compose(g, IDENTITY)


@given(elements(), elements())
def test_equality_is_pointwise(g, h):
    depth = max(g.depth(), h.depth())
    rng = random.Random(depth)
    addrs = ["".join(rng.choice("01") for _ in range(depth)) for _ in range(64)]
    pointwise = all(apply_to_address(g, a) == apply_to_address(h, a) for a in addrs)
    if equals(g, h):
        assert pointwise
    # distinct reduced forms differ on some full-depth address
    full = [format(i, f"0{depth}b") if depth else ROOT for i in range(2 ** depth)]
    differ = any(apply_to_address(g, a) != apply_to_address(h, a) for a in full)
    assert differ == (not equals(g, h))


def test_equals_examples():
    assert equals(swap("0", "10"), make_element([("0", "10"), ("10", "0"), ("11", "11")]))
    assert equals(swap("0", "10"), compose(swap("00", "100"), swap("01", "101")))
    assert not equals(IDENTITY, swap("00", "01"))


def test_apply_to_address():
    assert apply_to_address(swap("00", "10"), "0011") == "1011"
    assert apply_to_address(IDENTITY, "0101") == "0101"
    assert apply_to_address(swap("0", "10"), "0") == "10"
    with pytest.raises(AddressTooShort):
        apply_to_address(swap("0", "10"), "1")


def test_swap_examples():
    assert swap("00", "10").pairs == [("00", "10"), ("01", "01"), ("10", "00"), ("11", "11")]
    assert not is_small_support(swap("0", "1"))
    with pytest.raises(NotIncomparable):
        swap("0", "01")


@given(incomparable_triples())
def test_swap_laws(abc):
    a, b, c = abc
    s = swap(a, b)
    assert s == swap(b, a)
    assert compose(s, s).is_identity()
    assert s == compose(swap(a + "0", b + "0"), swap(a + "1", b + "1"))
    assert conjugate(s, swap(b, c)) == swap(a, c)


def test_cycle_examples():
    f = cycle(["00", "100", "1100"])
    assert compose(compose(f, f), f).is_identity()
    assert cycle(["01", "11"]) == swap("01", "11")
    with pytest.raises(TooShort):
        cycle(["0"])
    with pytest.raises(NotIncomparable):
        cycle(["0", "01", "1"])


def test_conjugate_by_identity():
    g = cycle(["00", "100", "1100"])
    assert conjugate(g, IDENTITY) == g


def test_commutator_convention():
    g, h = swap("00", "01"), cycle(["00", "01", "1"])
    expected = compose(compose(invert(g), invert(h)), compose(g, h))
    assert commutator(g, h) == expected


def test_support():
    assert support_cones(IDENTITY) == set()
    assert support_cones(swap("00", "10")) == {"00", "10"}
    assert support_cones(cycle(["00", "100", "1100"])) == {"00", "100", "1100"}
    assert is_small_support(swap("00", "10"))
    assert is_small_support(IDENTITY)


def test_support_is_clopen_overapproximation():
    g = make_element([("0", "00"), ("10", "01"), ("11", "1")])
    assert support_cones(g) == {"0", "10", "11"}
    assert not is_small_support(g)


def test_power_and_operators():
    f = cycle(["00", "100", "1100"])
    assert f ** 3 == IDENTITY
    assert f ** -1 == ~f == invert(f)
    assert f("00") == "100"
    assert str(swap("0", "1")) == "0 -> 1, 1 -> 0"
    assert completion(["00"]) == ("00", "01", "1")
