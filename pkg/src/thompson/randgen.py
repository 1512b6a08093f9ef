"""Seeded random elements for tests and experiments."""

from __future__ import annotations

import random

from .elements import Element, cycle, swap

GENERAL = "general"
FINITE_ORDER = "finite-order"
IN_T = "in-t"
SWAP = "swap"
THREE_CYCLE = "three-cycle"
PROFILES = (GENERAL, FINITE_ORDER, IN_T, SWAP, THREE_CYCLE)


def random_antichain(rng: random.Random, n: int) -> tuple[str, ...]:
    """Complete antichain with ``n`` leaves, grown by splitting random leaves."""
    leaves = [""]
    while len(leaves) < n:
        x = leaves.pop(rng.randrange(len(leaves)))
        leaves += [x + "0", x + "1"]
    return tuple(sorted(leaves))


def random_element(seed, max_leaves: int, profile: str = GENERAL) -> Element:
    if max_leaves < 2:
        raise ValueError("max_leaves must be at least 2")
    rng = random.Random(seed)
    if profile == GENERAL:
        n = rng.randint(2, max_leaves)
        dom = random_antichain(rng, n)
        rng_leaves = list(random_antichain(rng, n))
        rng.shuffle(rng_leaves)
        return Element.from_mapping(dict(zip(dom, rng_leaves)))
    if profile == FINITE_ORDER:
        n = rng.randint(2, max_leaves)
        dom = random_antichain(rng, n)
        images = list(dom)
        rng.shuffle(images)
        return Element.from_mapping(dict(zip(dom, images)))
    if profile == IN_T:
        n = rng.randint(2, max_leaves)
        dom = random_antichain(rng, n)
        rng_leaves = random_antichain(rng, n)
        k = rng.randrange(n)
        return Element.from_mapping({dom[i]: rng_leaves[(i + k) % n] for i in range(n)})
    if profile == SWAP:
        leaves = random_antichain(rng, rng.randint(2, max_leaves))
        a, b = rng.sample(leaves, 2)
        return swap(a, b)
    if profile == THREE_CYCLE:
        if max_leaves < 3:
            raise ValueError("a 3-cycle needs max_leaves >= 3")
        leaves = random_antichain(rng, rng.randint(3, max_leaves))
        return cycle(rng.sample(leaves, 3))
    raise ValueError(f"unknown profile {profile!r}")


def random_interleaved_marks(rng: random.Random, tree, k: int) -> tuple[str, ...]:
    """``k`` leaves of ``tree``, in lex order, no two circular neighbours."""
    n = len(tree)
    if n < 2 * k:
        raise ValueError("tree too small for k interleaved marks")
    while True:
        pos = sorted(rng.sample(range(n), k))
        gaps = [(pos[(i + 1) % k] - pos[i]) % n for i in range(k)] if k > 1 else [n]
        if all(g >= 2 for g in gaps):
            return tuple(tree[i] for i in pos)
