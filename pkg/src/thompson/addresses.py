"""Addresses of cones in Cantor space and complete antichains of them.

An address is a plain ``str`` over ``"0"``/``"1"``; the empty string is the
root address, naming the whole space.  Python's string ordering already is
the lexicographic order we need: for incomparable addresses the first
differing bit decides, and a proper prefix sorts before its extensions.

An antichain is a tuple of addresses in sorted order.  A *complete*
antichain is the leaf set of a finite rooted binary tree, i.e. a partition
of Cantor space into cones.
"""

from __future__ import annotations

import contextlib
import enum
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DepthExceeded,
    IncompleteAntichain,
    LeafNotPresent,
    NotIncomparable,
    ParseError,
    SingletonAntichain,
)

ROOT = ""

MAX_DEPTH = 64


@contextlib.contextmanager
def depth_limit(depth: int):
    """Temporarily change the maximum address length."""
    global MAX_DEPTH
    saved = MAX_DEPTH
    MAX_DEPTH = depth
    try:
        yield
    finally:
        MAX_DEPTH = saved


def check_depth(addr: str) -> str:
    if len(addr) > MAX_DEPTH:
        raise DepthExceeded(
            f"address of length {len(addr)} exceeds the depth bound {MAX_DEPTH}")
    return addr


def is_address(text: str) -> bool:
    return all(ch in "01" for ch in text)


def parse_address(text: str) -> str:
    text = text.strip()
    if text == "e":
        return ROOT
    if not text or not is_address(text):
        raise ParseError(f"not an address: {text!r}")
    return check_depth(text)


def format_address(addr: str) -> str:
    return addr if addr else "e"


class Relation(enum.Enum):
    EQUAL = "equal"
    A_IS_PREFIX = "a-is-prefix"
    B_IS_PREFIX = "b-is-prefix"
    INCOMPARABLE = "incomparable"


def prefix_relation(a: str, b: str) -> Relation:
    if a == b:
        return Relation.EQUAL
    if b.startswith(a):
        return Relation.A_IS_PREFIX
    if a.startswith(b):
        return Relation.B_IS_PREFIX
    return Relation.INCOMPARABLE


def incomparable(a: str, b: str) -> bool:
    return not (a.startswith(b) or b.startswith(a))


def lex_compare(a: str, b: str) -> int:
    """Return -1, 0 or 1.

    Incomparable addresses are ordered at their first differing bit; a proper
    prefix sorts before its extensions.
    """
    return (a > b) - (a < b)


def measure(addr: str) -> Fraction:
    return Fraction(1, 1 << len(addr))


def is_complete_antichain(addrs: Iterable[str]) -> bool:
    leaves = sorted(addrs)
    if not leaves:
        return False
    for x, y in zip(leaves, leaves[1:]):
        # sorted order puts a prefix directly before some extension of it
        if y.startswith(x):
            return False
    return sum(measure(x) for x in leaves) == 1


def antichain(addrs: Iterable[str]) -> tuple[str, ...]:
    """Validate and sort a complete antichain."""
    leaves = tuple(sorted(addrs))
    if not is_complete_antichain(leaves):
        raise IncompleteAntichain(
            "not a complete antichain: " + " ".join(map(format_address, leaves)))
    for leaf in leaves:
        check_depth(leaf)
    return leaves


def leaf_above(leaves: Sequence[str], addr: str) -> str | None:
    """The member of the sorted antichain that is a prefix of ``addr``, if any."""
    i = bisect_right(leaves, addr) - 1
    if i >= 0 and addr.startswith(leaves[i]):
        return leaves[i]
    return None


def leaves_below(leaves: Sequence[str], addr: str) -> list[str]:
    """Members of the sorted antichain that extend ``addr`` (including equality)."""
    i = bisect_left(leaves, addr)
    out = []
    while i < len(leaves) and leaves[i].startswith(addr):
        out.append(leaves[i])
        i += 1
    return out


def join(p: Sequence[str], q: Sequence[str]) -> tuple[str, ...]:
    """Coarsest common refinement of two complete antichains."""
    out = []
    for x in p:
        if leaf_above(q, x) is not None:
            out.append(x)
        else:
            out.extend(leaves_below(q, x))
    return tuple(sorted(out))


def refines(p: Sequence[str], q: Sequence[str]) -> bool:
    """True when every leaf of ``p`` lies inside some leaf of ``q``."""
    return all(leaf_above(q, x) is not None for x in p)


def split(p: Sequence[str], leaf: str) -> tuple[str, ...]:
    if leaf not in p:
        raise LeafNotPresent(f"{format_address(leaf)} is not a leaf")
    check_depth(leaf + "0")
    out = [x for x in p if x != leaf]
    out += [leaf + "0", leaf + "1"]
    return tuple(sorted(out))


def circular_neighbors(p: Sequence[str], leaf: str) -> tuple[str, str]:
    if leaf not in p:
        raise LeafNotPresent(f"{format_address(leaf)} is not a leaf")
    if len(p) < 2:
        raise SingletonAntichain("a one-leaf antichain has no neighbours")
    i = p.index(leaf)
    return p[i - 1], p[(i + 1) % len(p)]


def completion(addrs: Iterable[str]) -> tuple[str, ...]:
    """Smallest complete antichain containing the given incomparable addresses."""
    required = sorted(set(addrs))
    for x, y in zip(required, required[1:]):
        if y.startswith(x):
            raise NotIncomparable(
                f"{format_address(x)} and {format_address(y)} are comparable")
    for x in required:
        check_depth(x)
    out = []

    def grow(node: str) -> None:
        below = leaves_below(required, node)
        if not below or below == [node]:
            out.append(node)
            return
        grow(node + "0")
        grow(node + "1")

    grow(ROOT)
    return tuple(out)


def right_comb(n: int, prefix: str = ROOT) -> tuple[str, ...]:
    """The antichain (0, 10, 110, ..., 1^(n-2)0, 1^(n-1)) below ``prefix``."""
    if n < 1:
        raise ValueError("a comb needs at least one leaf")
    if n == 1:
        return (prefix,)
    leaves = [prefix + "1" * i + "0" for i in range(n - 1)]
    leaves.append(prefix + "1" * (n - 1))
    return tuple(check_depth(x) for x in leaves)
