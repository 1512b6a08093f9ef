"""Finite-order structure and the subgroups T and F.

Finite-order elements are handled in common-tree form: one complete
antichain together with a permutation of its leaves.  The subgroup T is the
set of elements that preserve the circular order of cones, F the set that
preserve the linear order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .addresses import (
    antichain,
    check_depth,
    format_address,
    join,
)
from .elements import (
    Element,
    apply_to_address,
    image_antichain,
    is_small_support,
)
from .errors import (
    BoundExceeded,
    DepthExceeded,
    FullSupport,
    GapMismatch,
    IdentityInput,
    LeafNotPresent,
    NotBijective,
    NotFiniteOrder,
    NotInterleaved,
    NotInterleavedSwap,
    NotOrdered,
    TooShort,
)
from . import words

DEFAULT_BOUND = 4096


@dataclass(frozen=True)
class ConePermutation:
    """A permutation of the leaves of a complete antichain: ``tree[i] -> images[i]``."""

    tree: tuple[str, ...]
    images: tuple[str, ...]

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> "ConePermutation":
        tree = tuple(sorted(mapping))
        return cls(tree, tuple(mapping[x] for x in tree))

    def mapping(self) -> dict[str, str]:
        return dict(zip(self.tree, self.images))

    def image(self, leaf: str) -> str:
        return self.images[self.tree.index(leaf)]

    def moved(self) -> list[str]:
        return [x for x, y in zip(self.tree, self.images) if x != y]

    def fixed(self) -> list[str]:
        return [x for x, y in zip(self.tree, self.images) if x == y]

    def element(self) -> Element:
        return Element.from_mapping(self.mapping())

    def cycles(self) -> list[tuple[str, ...]]:
        mp = self.mapping()
        seen = set()
        out = []
        for x in self.tree:
            if x in seen or mp[x] == x:
                continue
            cyc = [x]
            seen.add(x)
            y = mp[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = mp[y]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))


@dataclass(frozen=True)
class CycleDecomposition:
    tree: tuple[str, ...]
    cycles: tuple[tuple[str, ...], ...]
    fixed: tuple[str, ...]

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return " ".join("(" + " ".join(map(format_address, c)) + ")"
                        for c in self.cycles)


def common_tree_form(g: Element, bound: int = DEFAULT_BOUND) -> ConePermutation:
    """Represent ``g`` as a permutation of the leaves of a single tree.

    Starts from the reduced domain tree and refines by the images until the
    tree is invariant.  That happens exactly when ``g`` has finite order; for
    other elements the tree grows until ``bound`` leaves (or the depth bound)
    is exceeded and :class:`BoundExceeded` is raised.
    """
    leaves = g.domain
    try:
        while True:
            if len(leaves) > bound:
                raise BoundExceeded(
                    f"no finite-order witness within {bound} leaves")
            refined = join(leaves, image_antichain(g, leaves))
            if refined == leaves:
                break
            leaves = refined
    except DepthExceeded as exc:
        raise BoundExceeded(
            f"no finite-order witness within the depth bound ({exc})") from exc
    return ConePermutation(leaves, tuple(apply_to_address(g, x) for x in leaves))


def order_of(g: Element, bound: int = DEFAULT_BOUND) -> int | None:
    """Order of ``g``, or ``None`` when no finite-order witness is found."""
    try:
        return common_tree_form(g, bound).order()
    except BoundExceeded:
        return None


def _finite_form(g: Element, bound: int) -> ConePermutation:
    try:
        return common_tree_form(g, bound)
    except BoundExceeded as exc:
        raise NotFiniteOrder(str(exc)) from exc


def cycle_decomposition(g: Element, bound: int = DEFAULT_BOUND) -> CycleDecomposition:
    perm = _finite_form(g, bound)
    cycs = []
    for c in perm.cycles():
        i = c.index(min(c))
        cycs.append(c[i:] + c[:i])
    cycs.sort(key=lambda c: c[0])
    return CycleDecomposition(perm.tree, tuple(cycs), tuple(perm.fixed()))


def is_interleaved(p: ConePermutation) -> bool:
    mp = p.mapping()
    n = len(p.tree)
    for i, x in enumerate(p.tree):
        if mp[x] == x:
            continue
        if n < 2:
            return False
        left, right = p.tree[i - 1], p.tree[(i + 1) % n]
        if mp[left] != left or mp[right] != right:
            return False
    return True


def in_T(g: Element) -> bool:
    rng = g.range
    ordered = sorted(rng)
    start = ordered.index(rng[0])
    n = len(rng)
    return all(rng[j] == ordered[(start + j) % n] for j in range(n))


def in_F(g: Element) -> bool:
    return list(g.range) == sorted(g.range)


def rotation(p: Sequence[str], k: int) -> Element:
    p = antichain(p)
    n = len(p)
    return Element.from_mapping({p[i]: p[(i + k) % n] for i in range(n)})


def tree_map(source: Sequence[str], target: Sequence[str], k: int = 0) -> Element:
    """Element of T sending the i-th leaf of ``source`` to the (i+k)-th of ``target``."""
    source = antichain(source)
    target = antichain(target)
    if len(source) != len(target):
        raise NotBijective("trees have different numbers of leaves")
    n = len(source)
    return Element.from_mapping({source[i]: target[(i + k) % n] for i in range(n)})


def _split_shallowest(gap: list[str]) -> None:
    depth = min(map(len, gap))
    i = max(j for j, x in enumerate(gap) if len(x) == depth)
    x = gap[i]
    gap[i:i + 1] = [check_depth(x + "0"), check_depth(x + "1")]


def _circular_gaps(tree: Sequence[str], marks: Sequence[str]) -> list[list[str]]:
    n = len(tree)
    index = {x: i for i, x in enumerate(tree)}
    for m in marks:
        if m not in index:
            raise LeafNotPresent(f"{format_address(m)} is not a leaf")
    idx = [index[m] for m in marks]
    if len(set(idx)) != len(idx):
        raise NotOrdered("repeated marked leaf")
    k = len(idx)
    gaps = []
    total = 0
    for i in range(k):
        step = n if k == 1 else (idx[(i + 1) % k] - idx[i]) % n
        total += step
        gaps.append([tree[(idx[i] + j) % n] for j in range(1, step)])
    if total != n:
        raise NotOrdered("marked leaves are not in circular order")
    return gaps


def shape_circular(A: Sequence[str], alphas: Sequence[str],
                   B: Sequence[str], betas: Sequence[str]) -> Element:
    """Element of T taking each cone ``alphas[i]`` exactly onto ``betas[i]``.

    Both sequences must be in circular order on their trees, and an empty
    gap between consecutive marked leaves on one side must face an empty gap
    on the other.  Gaps are padded by splitting their shallowest leaf and
    then matched up in circular order.
    """
    if len(alphas) != len(betas):
        raise NotBijective("marked sequences have different lengths")
    if not alphas:
        raise TooShort("need at least one marked leaf")
    gaps_a = _circular_gaps(A, alphas)
    gaps_b = _circular_gaps(B, betas)
    mapping = {}
    for x, y, ga, gb in zip(alphas, betas, gaps_a, gaps_b):
        mapping[x] = y
        if bool(ga) != bool(gb):
            raise GapMismatch(
                f"gap after {format_address(x)} is "
                f"{'non' if ga else ''}empty, gap after {format_address(y)} is not")
        while len(ga) < len(gb):
            _split_shallowest(ga)
        while len(gb) < len(ga):
            _split_shallowest(gb)
        mapping.update(zip(ga, gb))
    return Element.from_mapping(mapping)


def _check_sequence(tree: Sequence[str], marks: Sequence[str]) -> None:
    index = {x: i for i, x in enumerate(tree)}
    for m in marks:
        if m not in index:
            raise LeafNotPresent(f"{format_address(m)} is not a leaf")
    for x, y in zip(marks, marks[1:]):
        if not x < y:
            raise NotOrdered(f"{format_address(x)} does not precede {format_address(y)}")
    pos = sorted(index[m] for m in marks)
    for i, j in zip(pos, pos[1:]):
        if j - i == 1:
            raise NotInterleaved(
                f"{format_address(tree[i])} and {format_address(tree[j])} are neighbours")


def shape_in_T(A: Sequence[str], alphas: Sequence[str],
               B: Sequence[str], betas: Sequence[str]) -> Element:
    """Element of T with cone ``alphas[i]`` mapped exactly onto cone ``betas[i]``.

    ``alphas`` and ``betas`` are ordered, interleaved leaf sequences of the
    complete antichains ``A`` and ``B``.  The gap that wraps around the end of
    each tree must be empty on both sides or on neither.
    """
    A = antichain(A)
    B = antichain(B)
    if len(alphas) != len(betas):
        raise NotBijective("marked sequences have different lengths")
    if not alphas:
        raise TooShort("need at least one marked leaf")
    _check_sequence(A, alphas)
    _check_sequence(B, betas)
    return shape_circular(A, alphas, B, betas)


SWAP_TREE = ("00", "01", "10", "11")


def _swap_form(s: Element, bound: int = DEFAULT_BOUND) -> ConePermutation | None:
    try:
        perm = common_tree_form(s, bound)
    except BoundExceeded:
        return None
    cycs = perm.cycles()
    if len(cycs) != 1 or len(cycs[0]) != 2:
        return None
    return perm


def canonicalize_interleaved_swap(s: Element) -> Element:
    """An element ``g`` of T with ``conjugate(s, g) == swap('00', '10')``."""
    perm = _swap_form(s)
    if perm is None or not is_interleaved(perm):
        raise NotInterleavedSwap("not an interleaved swap")
    alpha, beta = perm.moved()
    return shape_in_T(perm.tree, (alpha, beta), SWAP_TREE, ("00", "10"))


def _separation_step(perm: ConePermutation, gperm: ConePermutation) -> tuple[ConePermutation, Element]:
    """One step towards an interleaved form.

    ``perm`` is the current conjugate ``h`` of ``g`` and ``gperm`` the common
    tree form of ``g``.  Picks ``p``, the first leaf of a run of at least two
    adjacent moved leaves of ``h``, and an element ``t`` of T that sends one
    moved leaf ``u`` of ``g`` onto ``p`` and the other moved leaves of ``g``
    to isolated slots in the fixed run of ``h`` just before ``p``.  Then
    ``y = g^t`` moves ``p`` to a slot and fixes the rest of the support of
    ``h``, so ``h^y`` has one fewer leaf in a run.  Returns ``h^y`` (on a
    refined tree) and ``t``.
    """
    tree = perm.tree
    mp = perm.mapping()
    n = len(tree)
    moved = [mp[x] != x for x in tree]
    run_start = None
    for i in range(n):
        if moved[i] and not moved[i - 1] and moved[(i + 1) % n]:
            run_start = i
            break
    assert run_start is not None
    circle = list(tree[run_start:] + tree[:run_start])
    gap_len = 0
    while not moved[(run_start - 1 - gap_len) % n]:
        gap_len += 1
    gap = circle[n - gap_len:]
    circle = circle[:n - gap_len]

    # moved leaves of g in circular order, starting at the end u of a run
    g_tree = gperm.tree
    g_map = gperm.mapping()
    m = len(g_tree)
    g_moved = [g_map[x] != x for x in g_tree]
    u = next(i for i in range(m) if g_moved[i] and not g_moved[(i + 1) % m])
    ms = [g_tree[(u + j) % m] for j in range(m) if g_moved[(u + j) % m]]
    k = len(ms)
    g_pos = {x: i for i, x in enumerate(g_tree)}

    def adjacent(x: str, y: str) -> bool:
        return (g_pos[y] - g_pos[x]) % m == 1

    while len(gap) < 2 * k + 2:
        _split_shallowest(gap)
    circle += gap
    p = circle[0]
    for x in gap:
        mp.setdefault(x, x)

    targets = [p] + [None] * (k - 1)
    pos = len(gap) - (1 if adjacent(ms[-1], ms[0]) else 2)
    for j in range(k - 1, 0, -1):
        targets[j] = gap[pos]
        if j > 1:
            pos -= 1 if adjacent(ms[j - 1], ms[j]) else 2
    new_tree = tuple(sorted(circle))
    t = shape_circular(g_tree, ms, new_tree, targets)
    slot = dict(zip(ms, targets))
    y = {x: x for x in new_tree}
    for x in ms:
        y[slot[x]] = slot[g_map[x]]
    new_map = {y[x]: y[mp[x]] for x in new_tree}
    return ConePermutation.from_mapping(new_map), t


def interleave(g: Element, bound: int = DEFAULT_BOUND) -> tuple[list[words.Token], ConePermutation]:
    """Conjugate ``g`` to an interleaved permutation inside the group <g, T>.

    Returns ``(word, h)`` where ``word`` is a word over ``g`` and elements of
    T, and ``h`` is an interleaved cone permutation whose element equals
    ``W^-1 g W`` for ``W`` the value of ``word``.  When ``g`` is already
    interleaved the word is empty.

    Each separation step appends one conjugate ``t^-1 g t``, so the word is
    linear in the number of moved leaves; the depth of its value still grows
    by a few levels per step, and evaluating it for elements with a dozen or
    more adjacent moved cones can exceed the address-length bound.
    """
    if g.is_identity():
        raise IdentityInput("the identity has no moved cones")
    perm = _finite_form(g, bound)
    if not is_small_support(g):
        raise FullSupport("element moves every cone")
    gperm = perm
    word: list[words.Token] = []
    while not is_interleaved(perm):
        perm, t = _separation_step(perm, gperm)
        word = words.simplify(word + words.conjugate_word([words.A], [words.t(t)]))
    return word, perm
