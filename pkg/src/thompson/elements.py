"""Elements of Thompson's group V as reduced prefix substitution maps.

Conventions: maps act on the right, so ``g * h`` means "apply g, then h",
and ``conjugate(g, h)`` is ``h^-1 g h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .addresses import (
    ROOT,
    check_depth,
    completion,
    format_address,
    incomparable,
    is_complete_antichain,
    leaf_above,
    leaves_below,
)
from .errors import (
    AddressTooShort,
    IncompleteDomain,
    IncompleteRange,
    NotBijective,
    NotIncomparable,
    TooShort,
)


def _reduce_pairs(mapping: dict[str, str]) -> dict[str, str]:
    """Merge sibling pairs (x0 -> y0, x1 -> y1) into x -> y until none remain."""
    stack = [d for d in mapping if d.endswith("0")]
    while stack:
        d0 = stack.pop()
        if d0 not in mapping:
            continue
        parent = d0[:-1]
        d1 = parent + "1"
        r0 = mapping[d0]
        r1 = mapping.get(d1)
        if r1 is None or not r0.endswith("0") or r1 != r0[:-1] + "1":
            continue
        del mapping[d0], mapping[d1]
        mapping[parent] = r0[:-1]
        if parent.endswith("0"):
            stack.append(parent)
        elif parent:
            stack.append(parent[:-1] + "0")
    return mapping


@dataclass(frozen=True)
class Element:
    """A reduced tree-pair: ``domain[i] -> range[i]`` with domain sorted.

    Build instances with :func:`make_element` (validating) or
    :meth:`from_mapping` (trusted input, still reduced).
    """

    domain: tuple[str, ...]
    range: tuple[str, ...]

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> "Element":
        mapping = _reduce_pairs(dict(mapping))
        dom = tuple(sorted(mapping))
        return cls(dom, tuple(mapping[d] for d in dom))

    @property
    def pairs(self) -> list[tuple[str, str]]:
        return list(zip(self.domain, self.range))

    def mapping(self) -> dict[str, str]:
        return dict(zip(self.domain, self.range))

    def __len__(self) -> int:
        return len(self.domain)

    def is_identity(self) -> bool:
        return self.domain == (ROOT,) and self.range == (ROOT,)

    def depth(self) -> int:
        return max(max(map(len, self.domain)), max(map(len, self.range)))

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def __invert__(self) -> "Element":
        return invert(self)

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            return invert(self) ** -n
        result = IDENTITY
        base = self
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    def __call__(self, addr: str) -> str:
        return apply_to_address(self, addr)

    def __str__(self) -> str:
        return ", ".join(f"{format_address(d)} -> {format_address(r)}"
                         for d, r in self.pairs)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


IDENTITY = Element((ROOT,), (ROOT,))


def identity() -> Element:
    return IDENTITY


def make_element(pairs: Iterable[tuple[str, str]]) -> Element:
    pairs = list(pairs)
    dom = [d for d, _ in pairs]
    rng = [r for _, r in pairs]
    for x in dom + rng:
        check_depth(x)
    if len(set(dom)) != len(dom) or len(set(rng)) != len(rng):
        raise NotBijective("repeated address in pair list")
    if not is_complete_antichain(dom):
        raise IncompleteDomain("domain addresses do not partition Cantor space")
    if not is_complete_antichain(rng):
        raise IncompleteRange("range addresses do not partition Cantor space")
    return Element.from_mapping(dict(pairs))


def reduce(e: Element) -> Element:
    return Element.from_mapping(e.mapping())


def compose(g: Element, h: Element) -> Element:
    """Apply ``g`` first, then ``h``."""
    if g.is_identity():
        return h
    if h.is_identity():
        return g
    h_dom = h.domain
    h_map = h.mapping()
    out = {}
    for x, y in zip(g.domain, g.range):
        d = leaf_above(h_dom, y)
        if d is not None:
            out[x] = check_depth(h_map[d] + y[len(d):])
        else:
            for d in leaves_below(h_dom, y):
                out[check_depth(x + d[len(y):])] = h_map[d]
    return Element.from_mapping(out)


def invert(g: Element) -> Element:
    order = sorted(range(len(g.domain)), key=g.range.__getitem__)
    return Element(tuple(g.range[i] for i in order),
                   tuple(g.domain[i] for i in order))


def equals(g: Element, h: Element) -> bool:
    return g == h


def conjugate(g: Element, h: Element) -> Element:
    """``h^-1 g h``."""
    return compose(compose(invert(h), g), h)


def commutator(g: Element, h: Element) -> Element:
    """``[g, h] = g^-1 h^-1 g h``."""
    return compose(compose(invert(g), invert(h)), compose(g, h))


def apply_to_address(g: Element, addr: str) -> str:
    d = leaf_above(g.domain, addr)
    if d is None:
        raise AddressTooShort(
            f"{format_address(addr)} is a proper prefix of several domain leaves")
    r = g.range[g.domain.index(d)]
    return check_depth(r + addr[len(d):])


def image_antichain(g: Element, leaves: Sequence[str]) -> tuple[str, ...]:
    """Images of the leaves of an antichain refining the domain of ``g``."""
    return tuple(sorted(apply_to_address(g, x) for x in leaves))


def permutation_element(mapping: dict[str, str]) -> Element:
    """Element permuting the leaves of a complete antichain, as ``leaf -> image``."""
    return Element.from_mapping(mapping)


def cycle(addrs: Sequence[str]) -> Element:
    """Cyclically permute the listed cones: addrs[0] -> addrs[1] -> ... -> addrs[0]."""
    addrs = list(addrs)
    if len(addrs) < 2:
        raise TooShort("a cycle needs at least two addresses")
    if len(set(addrs)) != len(addrs):
        raise NotIncomparable("repeated address in cycle")
    tree = completion(addrs)
    mapping = {x: x for x in tree}
    for i, x in enumerate(addrs):
        mapping[x] = addrs[(i + 1) % len(addrs)]
    return Element.from_mapping(mapping)


def cycles(groups: Iterable[Sequence[str]]) -> Element:
    """Product of disjoint cycles; one-element groups are ignored."""
    groups = [list(c) for c in groups if len(c) > 1]
    everything = [x for c in groups for x in c]
    if not everything:
        return IDENTITY
    if len(set(everything)) != len(everything):
        raise NotIncomparable("cycles are not disjoint")
    tree = completion(everything)
    mapping = {x: x for x in tree}
    for c in groups:
        for i, x in enumerate(c):
            mapping[x] = c[(i + 1) % len(c)]
    return Element.from_mapping(mapping)


def swap(a: str, b: str) -> Element:
    if not incomparable(a, b):
        raise NotIncomparable(
            f"{format_address(a)} and {format_address(b)} are comparable")
    return cycle([a, b])


def support_cones(g: Element) -> set[str]:
    """Domain leaves of the reduced form that are not mapped to themselves.

    Exact for finite-order elements; an over-approximation otherwise.
    """
    return {d for d, r in g.pairs if d != r}


def is_small_support(g: Element) -> bool:
    """Whether some cone is fixed pointwise.

    A cone fixed pointwise must meet a reduced pair ``x -> x``: a pair
    ``x -> y`` with ``x != y`` fixes at most one point.
    """
    return any(d == r for d, r in g.pairs)
