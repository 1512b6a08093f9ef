import math
import random

import pytest
from hypothesis import given, settings

from thompson import words
from thompson.addresses import ROOT
from thompson.elements import (
    IDENTITY,
    apply_to_address,
    compose,
    conjugate,
    cycle,
    cycles,
    invert,
    make_element,
    swap,
)
from thompson.errors import (
    BoundExceeded,
    FullSupport,
    GapMismatch,
    IdentityInput,
    NotFiniteOrder,
    NotInterleaved,
    NotInterleavedSwap,
    NotOrdered,
)
from thompson.randgen import random_antichain, random_element, random_interleaved_marks
from thompson.structure import (
    ConePermutation,
    canonicalize_interleaved_swap,
    common_tree_form,
    cycle_decomposition,
    in_F,
    in_T,
    interleave,
    is_interleaved,
    order_of,
    rotation,
    shape_in_T,
)

from conftest import elements

INFINITE = make_element([("0", "00"), ("10", "01"), ("11", "1")])
ORDER_FOUR = cycles([["00", "110", "010", "101"], ["011", "111"]])


def test_common_tree_form_examples():
    p = common_tree_form(swap("0", "10"))
    assert p.tree == ("0", "10", "11")
    assert p.images == ("10", "0", "11")
    assert common_tree_form(IDENTITY) == ConePermutation((ROOT,), (ROOT,))
    with pytest.raises(BoundExceeded):
        common_tree_form(INFINITE, 4096)


@settings(max_examples=100)
@given(elements(max_leaves=12, profile="finite-order"))
def test_common_tree_form_round_trip(g):
    p = common_tree_form(g)
    assert p.element() == g
    assert sorted(p.images) == list(p.tree)


def test_order_of():
    assert order_of(swap("00", "10")) == 2
    assert order_of(cycle(["00", "100", "1100"])) == 3
    assert order_of(IDENTITY) == 1
    assert order_of(ORDER_FOUR) == 4
    assert order_of(INFINITE) is None


def test_cycle_decomposition_examples():
    g = compose(swap("00", "1100"), swap("100", "1110"))
    d = cycle_decomposition(g)
    assert d.cycles == (("00", "1100"), ("100", "1110"))
    assert d.tree == ("00", "01", "100", "101", "1100", "1101", "1110", "1111")
    assert cycle_decomposition(IDENTITY).cycles == ()
    assert len(cycle_decomposition(cycle(["00", "100", "1100"])).cycles) == 1
    assert str(cycle_decomposition(ORDER_FOUR)) == "(00 110 010 101) (011 111)"
    with pytest.raises(NotFiniteOrder):
        cycle_decomposition(INFINITE)


@given(elements(max_leaves=12, profile="finite-order"))
def test_cycle_decomposition_product(g):
    d = cycle_decomposition(g)
    assert cycles(d.cycles) == g
    leaves = [x for c in d.cycles for x in c] + list(d.fixed)
    assert sorted(leaves) == list(d.tree)


def test_is_interleaved_examples():
    tree = ("00", "01", "10", "11")
    assert is_interleaved(ConePermutation(tree, ("10", "01", "00", "11")))
    assert not is_interleaved(ConePermutation(tree, ("01", "00", "10", "11")))
    assert is_interleaved(ConePermutation((ROOT,), (ROOT,)))


def _check_interleave(g):
    word, h = interleave(g)
    assert is_interleaved(h)
    for tok in word:
        assert tok.kind != words.TELEM or in_T(tok.payload)
    w = words.evaluate(word, g)
    assert conjugate(g, w) == h.element()
    return word, h


@pytest.mark.parametrize("g", [
    swap("00", "01"),
    swap("00", "11"),
    swap("0", "10"),
    swap("00", "10"),
    cycle(["00", "01", "100"]),
    cycles([["000", "001"], ["01", "10"]]),
])
def test_interleave_examples(g):
    _check_interleave(g)


def test_interleave_keeps_interleaved_input():
    word, h = _check_interleave(swap("00", "10"))
    assert word == []


def test_interleave_errors():
    with pytest.raises(FullSupport):
        interleave(swap("0", "1"))
    with pytest.raises(IdentityInput):
        interleave(IDENTITY)
    with pytest.raises(NotFiniteOrder):
        interleave(INFINITE)


def test_no_element_of_T_interleaves_an_adjacent_swap():
    # conjugating by T keeps the two moved cones circular neighbours, so the
    # interleaving conjugator has to involve the element itself
    s = swap("00", "01")
    for seed in range(300):
        t = random_element(seed, 10, "in-t")
        h = common_tree_form(conjugate(s, t))
        assert not is_interleaved(h)


@settings(max_examples=60)
@given(elements(max_leaves=10, profile="finite-order"))
def test_interleave_random(g):
    if g.is_identity() or not any(d == r for d, r in g.pairs):
        return
    _check_interleave(g)


def test_in_T_examples():
    assert in_T(make_element([("0", "10"), ("10", "11"), ("11", "0")]))
    assert not in_T(swap("00", "10"))
    assert in_T(swap("0", "1"))


def test_in_F_examples():
    assert in_F(IDENTITY)
    assert in_F(INFINITE)
    assert not in_F(make_element([("0", "10"), ("10", "11"), ("11", "0")]))


@given(elements(max_leaves=10, profile="in-t"), elements(max_leaves=10, profile="in-t"))
def test_in_T_closed(g, h):
    assert in_T(g) and in_T(h)
    assert in_T(compose(g, h))
    assert in_T(invert(g))
    if in_F(g):
        assert in_T(g)


def test_rotation():
    p = ("0", "10", "11")
    assert rotation(p, 1) == make_element([("0", "10"), ("10", "11"), ("11", "0")])
    assert rotation(p, 0) == IDENTITY
    q = random_antichain(random.Random(3), 6)
    for k in range(6):
        r = rotation(q, k)
        assert in_T(r)
        assert r ** (6 // math.gcd(6, k)) == IDENTITY


def _maps_exactly(t, alphas, betas, depth):
    for a, b in zip(alphas, betas):
        for i in range(2 ** depth):
            w = format(i, f"0{depth}b") if depth else ""
            if apply_to_address(t, a + w) != b + w:
                return False
    return True


def test_shape_in_T_examples():
    full3 = tuple(format(i, "03b") for i in range(8))
    t = shape_in_T(("00", "01", "10", "11"), ("00", "10"), full3, ("100", "110"))
    assert in_T(t) and _maps_exactly(t, ("00", "10"), ("100", "110"), 6)
    t = shape_in_T(("0", "10", "11"), ("10",), ("0", "10", "11"), ("10",))
    assert in_T(t) and _maps_exactly(t, ("10",), ("10",), 4)


def test_shape_in_T_three_cycle_position():
    tree = ("000", "001", "01", "100", "101", "110", "111")
    alphas = ("001", "100", "110")
    target_tree = ("00", "01", "100", "101", "1100", "1101", "111")
    t = shape_in_T(tree, alphas, target_tree, ("00", "100", "1100"))
    assert in_T(t) and _maps_exactly(t, alphas, ("00", "100", "1100"), 4)


def test_shape_in_T_errors():
    tree = ("00", "01", "10", "11")
    with pytest.raises(NotOrdered):
        shape_in_T(tree, ("10", "00"), tree, ("00", "10"))
    with pytest.raises(NotInterleaved):
        shape_in_T(tree, ("00", "01"), tree, ("00", "10"))
    # the wrap-around gap is empty on one side only
    with pytest.raises(GapMismatch):
        shape_in_T(("0", "10", "11"), ("0", "11"), tree, ("01", "11"))


def test_shape_in_T_random():
    rng = random.Random(2024)
    for _ in range(100):
        k = rng.randint(1, 5)
        A = random_antichain(rng, rng.randint(2 * k, 24))
        B = random_antichain(rng, rng.randint(2 * k, 24))
        alphas = random_interleaved_marks(rng, A, k)
        betas = random_interleaved_marks(rng, B, k)
        t = shape_in_T(A, alphas, B, betas)
        assert in_T(t)
        assert _maps_exactly(t, alphas, betas, 4)


def test_canonicalize_interleaved_swap():
    g = canonicalize_interleaved_swap(swap("00", "10"))
    assert in_T(g) and conjugate(swap("00", "10"), g) == swap("00", "10")
    s = swap("000", "010")
    g = canonicalize_interleaved_swap(s)
    assert in_T(g) and conjugate(s, g) == swap("00", "10")
    with pytest.raises(NotInterleavedSwap):
        canonicalize_interleaved_swap(swap("00", "01"))
