"""Generation engines for V over T.

* :func:`swap_decompose` writes any element as an even product of swaps.
* :func:`express_via_swap_and_T` and :func:`express_via_three_cycle_and_T`
  write any target as a word in a small-support swap (resp. 3-cycle) and
  elements of T.
* :func:`maximality_certificate` does the same for an arbitrary generator
  outside T, by first extracting a swap or a 3-cycle from it.

Every engine returns a :class:`Certificate`, which is checked by plain
multiplication in :func:`verify_certificate`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import words
from .addresses import completion, right_comb
from .elements import (
    IDENTITY,
    Element,
    apply_to_address,
    commutator,
    compose,
    conjugate,
    cycle,
    invert,
    is_small_support,
    swap,
)
from .errors import (
    FullSupport,
    FullSupportSwap,
    GeneratorInT,
    NotSwap,
    NotThreeCycle,
    ThompsonError,
    BoundExceeded,
)
from .structure import (
    ConePermutation,
    _swap_form,
    canonicalize_interleaved_swap,
    common_tree_form,
    in_T,
    interleave,
    shape_in_T,
    tree_map,
)

SWAP_BRANCH = "swap"
THREE_CYCLE_BRANCH = "three-cycle"


@dataclass
class Certificate:
    """A word over the generator and elements of T, claimed to equal ``target``."""

    word: list[words.Token]
    target: Element
    audit: dict[str, Element] = field(default_factory=dict)
    branch: str | None = None


def _swap_pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def _apply_swaps(addr: str, swaps) -> str:
    for a, b in swaps:
        if addr.startswith(a):
            addr = b + addr[len(a):]
        elif addr.startswith(b):
            addr = a + addr[len(b):]
    return addr


def _swaps_to_comb(leaves) -> list[tuple[str, str]]:
    """Swaps carrying the tree with these leaves onto the right comb.

    Each swap exchanges the subtree hanging at ``1^j 0`` with a leaf below
    ``1^j 1``, after which ``1^j 0`` is a leaf of the moved tree.
    """
    current = set(leaves)
    swaps = []
    node = ""
    while node not in current:
        left = node + "0"
        if left not in current:
            right_leaf = min(x for x in current if x.startswith(node + "1"))
            swaps.append((left, right_leaf))
            current = {_apply_swaps(x, [(left, right_leaf)]) for x in current}
        node += "1"
    return swaps


def swap_decompose(g: Element) -> list[tuple[str, str]]:
    """An even-length list of swaps whose left-to-right product is ``g``.

    Writes ``g = p h`` where ``h`` carries the domain tree onto the range
    tree leaf by leaf (through the right comb, by subtree exchanges) and
    ``p`` permutes the leaves of the domain tree; ``p`` is then split into
    transpositions cycle by cycle.
    """
    dom, rng = g.domain, g.range
    if set(dom) == set(rng):
        carry: list[tuple[str, str]] = []
    else:
        carry = _swaps_to_comb(dom) + _swaps_to_comb(rng)[::-1]
    back = {_apply_swaps(x, carry): x for x in dom}
    perm = ConePermutation.from_mapping({d: back[r] for d, r in zip(dom, rng)})
    swaps = []
    for cyc in perm.cycles():
        swaps += [(cyc[0], x) for x in cyc[1:]]
    swaps += carry
    swaps = [_swap_pair(a, b) for a, b in swaps]
    out: list[tuple[str, str]] = []
    for sw in swaps:
        if out and out[-1] == sw:
            out.pop()
        else:
            out.append(sw)
    if len(out) % 2:
        i = out.index(min(out))
        a, b = out[i]
        out[i:i + 1] = [(a + "0", b + "0"), (a + "1", b + "1")]
    return out


def swap_product(swaps) -> Element:
    result = IDENTITY
    for a, b in swaps:
        result = compose(result, swap(a, b))
    return result


def _shortcut(generator: Element, target: Element) -> list[words.Token] | None:
    if target.is_identity():
        return []
    if target == generator:
        return [words.A]
    if target == invert(generator):
        return [words.A_INV]
    if in_T(target):
        return [words.t(target)]
    return None


@functools.lru_cache(maxsize=None)
def _swap_is_interleaved(a: str, b: str) -> bool:
    tree = completion([a, b])
    n = len(tree)
    i, j = tree.index(a), tree.index(b)
    return (j - i) % n not in (1, n - 1)


def _swap_cost(a: str, b: str) -> int:
    """Copies of the base swap needed for swap(a, b)."""
    if {a, b} == {"0", "1"}:
        return 0
    return 1 if _swap_is_interleaved(a, b) else 2


def _cheapest_transpositions(cyc: tuple[str, ...]) -> list[tuple[str, str]]:
    best = None
    for i in range(len(cyc)):
        rot = cyc[i:] + cyc[:i]
        swaps = [_swap_pair(rot[0], x) for x in rot[1:]]
        cost = sum(_swap_cost(a, b) for a, b in swaps)
        if best is None or cost < best[0]:
            best = (cost, swaps)
    return best[1]


def permutation_times_T(g: Element) -> tuple[list[tuple[str, str]], Element]:
    """Swaps ``s_1 .. s_m`` and ``h`` in T with ``g = s_1 ... s_m h``.

    ``h`` sends the domain tree of ``g`` onto its range tree by a rotation;
    the rotation amount is chosen to make the swap part cheapest.
    """
    dom, rng = g.domain, g.range
    n = len(dom)
    ordered = tuple(sorted(rng))
    pos = {r: i for i, r in enumerate(ordered)}
    best = None
    for k in range(n):
        perm = ConePermutation.from_mapping(
            {d: dom[(pos[r] - k) % n] for d, r in zip(dom, rng)})
        swaps = [sw for cyc in perm.cycles() for sw in _cheapest_transpositions(cyc)]
        cost = sum(_swap_cost(a, b) for a, b in swaps)
        if best is None or cost < best[0]:
            best = (cost, swaps, k)
    _, swaps, k = best
    return swaps, tree_map(dom, ordered, k)


def _words_for_swaps(swaps, base: list[words.Token]) -> list[words.Token]:
    """Word for the product of ``swaps``, given a word ``base`` for swap(00, 10)."""
    out: list[words.Token] = []
    for a, b in swaps:
        if {a, b} == {"0", "1"}:
            out.append(words.t(swap("0", "1")))
            continue
        if _swap_is_interleaved(a, b):
            halves = [(a, b)]
        else:
            halves = [(a + "0", b + "0"), (a + "1", b + "1")]
        for u, v in halves:
            g = canonicalize_interleaved_swap(swap(u, v))
            out.extend(words.conjugate_word(base, [words.t(invert(g))]))
    return words.simplify(out)


def express_with_base(base: list[words.Token], target: Element) -> list[words.Token]:
    """Word for ``target`` given a word ``base`` for swap(00, 10) (over any generator)."""
    if in_T(target):
        return [] if target.is_identity() else [words.t(target)]
    swaps, h = permutation_times_T(target)
    return words.simplify(_words_for_swaps(swaps, base) + [words.t(h)])


def express_via_swap_and_T(s: Element, target: Element) -> Certificate:
    """Write ``target`` as a word in the small-support swap ``s`` and T."""
    perm = _swap_form(s)
    if perm is None:
        raise NotSwap("generator is not a swap")
    if not is_small_support(s):
        raise FullSupportSwap("swap(0, 1) lies in T and generates nothing new")
    shortcut = _shortcut(s, target)
    cert = Certificate([], target, branch=SWAP_BRANCH)
    conj_word, h = interleave(s)
    g = canonicalize_interleaved_swap(h.element())
    cert.audit["interleaved_swap"] = h.element()
    cert.audit["canonicalizer"] = g
    if shortcut is not None:
        cert.word = shortcut
        return cert
    base = words.conjugate_word([words.A], conj_word + [words.t(g)])
    cert.word = express_with_base(base, target)
    return cert


THREE_CYCLE = ("00", "100", "1100")
THREE_CYCLE_TREE = ("00", "01", "100", "101", "1100", "1101", "111")
SHIFTED_CYCLE = ("00", "100", "1110")
SHIFTED_CYCLE_TREE = ("00", "01", "100", "101", "110", "1110", "1111")
DOUBLE_SWAP_TREE = ("00", "01", "100", "101", "1100", "1101", "1110", "1111")
DOUBLE_SWAP_SUPPORT = ("00", "100", "1100", "1110")
HALVES_TREE = ("000", "001", "010", "011", "1000", "1001", "1010", "1011", "11")
LEFT_HALVES = ("000", "010", "1000", "1010")
RIGHT_HALVES = ("001", "011", "1001", "1011")
BASE_TREE = ("000", "001", "0100", "0101", "011", "100", "101", "110", "1110", "1111")
BASE_LEFT = ("000", "0101", "100", "1110")
BASE_RIGHT = ("001", "0101", "101", "1110")


def _three_cycle_form(f: Element) -> ConePermutation | None:
    try:
        perm = common_tree_form(f)
    except BoundExceeded:
        return None
    cycs = perm.cycles()
    if len(cycs) != 1 or len(cycs[0]) != 3:
        return None
    return perm


def _check(condition: bool, what: str) -> None:
    if not condition:
        raise AssertionError(f"pipeline identity failed: {what}")


def _double_swap_from_three_cycle(f: Element) -> tuple[list[words.Token], dict[str, Element]]:
    """Word for swap(00, 1100) swap(100, 1110) over the 3-cycle ``f`` and T."""
    conj_word, h = interleave(f)
    a1, a2, a3 = h.moved()
    base = [words.A] if h.image(a1) == a2 else [words.A_INV]
    h_el = h.element() if base == [words.A] else invert(h.element())
    t = shape_in_T(h.tree, (a1, a2, a3), THREE_CYCLE_TREE, THREE_CYCLE)
    f0 = cycle(THREE_CYCLE)
    _check(conjugate(h_el, t) == f0, "shaped 3-cycle")
    f0_word = words.conjugate_word(base, conj_word + [words.t(t)])

    x = shape_in_T(THREE_CYCLE_TREE, THREE_CYCLE, SHIFTED_CYCLE_TREE, SHIFTED_CYCLE)
    f1 = conjugate(f0, x)
    _check(f1 == cycle(SHIFTED_CYCLE), "shifted 3-cycle")
    product = compose(f0, f1)
    _check(product == compose(swap("00", "1110"), swap("100", "1100")),
           "product of 3-cycles")
    product_word = words.simplify(f0_word + words.conjugate_word(f0_word, [words.t(x)]))

    q = conjugate(product, f0)
    _check(q == compose(swap("00", "1100"), swap("100", "1110")), "conjugated product")
    q_word = words.conjugate_word(product_word, f0_word)
    audit = {"interleaved_cycle": h.element(), "t": t, "x": x,
             "cycle_product": product, "conjugated_product": q}
    return q_word, audit


def _halves(q: Element, q_word, left, right, expected, audit, names):
    y = shape_in_T(DOUBLE_SWAP_TREE, DOUBLE_SWAP_SUPPORT, *left)
    z = shape_in_T(DOUBLE_SWAP_TREE, DOUBLE_SWAP_SUPPORT, *right)
    qy, qz = conjugate(q, y), conjugate(q, z)
    _check(compose(qy, qz) == expected, names[0])
    audit.update({names[1]: y, names[2]: z, names[3]: qy, names[4]: qz})
    return words.simplify(words.conjugate_word(q_word, [words.t(y)])
                          + words.conjugate_word(q_word, [words.t(z)]))


def swap_from_three_cycle(f: Element) -> tuple[list[words.Token], dict[str, Element]]:
    """Word over the small-support 3-cycle ``f`` and T equal to swap(0, 10).

    Returns the word and the named intermediate elements.
    """
    q_word, audit = _double_swap_from_three_cycle(f)
    return _swap_0_10(q_word, audit), audit


def _swap_0_10(q_word, audit):
    q = audit["conjugated_product"]
    word = _halves(q, q_word, (HALVES_TREE, LEFT_HALVES), (HALVES_TREE, RIGHT_HALVES),
                   swap("0", "10"), audit,
                   ("swap(0, 10)", "y", "z", "left_halves", "right_halves"))
    _check(audit["left_halves"] == compose(swap("000", "1000"), swap("010", "1010")),
           "left halves")
    _check(audit["right_halves"] == compose(swap("001", "1001"), swap("011", "1011")),
           "right halves")
    return word


def express_via_three_cycle_and_T(f: Element, target: Element) -> Certificate:
    """Write ``target`` as a word in the small-support 3-cycle ``f`` and T.

    The word is built on swap(00, 10), obtained like swap(0, 10) but with the
    halves taken from a shallower tree, so it needs no interleaving step.
    """
    if _three_cycle_form(f) is None:
        raise NotThreeCycle("generator is not a 3-cycle of cones")
    if not is_small_support(f):
        raise FullSupport("3-cycle moves every cone")
    q_word, audit = _double_swap_from_three_cycle(f)
    _swap_0_10(q_word, audit)
    base = _halves(audit["conjugated_product"], q_word,
                   (BASE_TREE, BASE_LEFT), (BASE_TREE, BASE_RIGHT),
                   swap("00", "10"), audit,
                   ("swap(00, 10)", "y_base", "z_base", "left_base", "right_base"))
    cert = Certificate([], target, audit, THREE_CYCLE_BRANCH)
    shortcut = _shortcut(f, target)
    cert.word = shortcut if shortcut is not None else express_with_base(base, target)
    return cert


def maximality_certificate(a: Element, target: Element) -> Certificate:
    """Write ``target`` as a word in ``a`` and T, for any ``a`` outside T."""
    if in_T(a):
        raise GeneratorInT("generator lies in T")
    audit = {}
    dom, rng = a.domain, a.range
    n = len(dom)
    sorted_rng = tuple(sorted(rng))
    # b: range tree -> domain tree, rotated so that c = ab fixes the first leaf
    k = -sorted_rng.index(rng[0])
    b = tree_map(sorted_rng, dom, k)
    c = compose(a, b)
    c_map = {d: dom[(sorted_rng.index(r) + k) % n] for d, r in zip(dom, rng)}
    c_perm = ConePermutation.from_mapping(c_map)
    _check(c == c_perm.element(), "c is a permutation of the domain tree")

    # s: conjugate c so that it fixes cone 0 and moves cone 10
    i = next(j for j in range(n)
             if c_map[dom[j]] == dom[j] and c_map[dom[(j + 1) % n]] != dom[(j + 1) % n])
    comb = right_comb(n)
    s = tree_map(dom, comb, -i)
    s_fwd = {dom[(i + j) % n]: comb[j] for j in range(n)}
    cs_map = {s_fwd[x]: s_fwd[c_map[x]] for x in dom}
    cs = conjugate(c, s)
    _check(cs == Element.from_mapping(cs_map), "shaped c")
    _check(cs_map["0"] == "0" and cs_map["10"] != "10", "shaped c fixes 0, moves 10")

    # d: rightmost moved leaf -> 10, its right neighbour -> 11, the rest under 0
    moved = [x for x in comb if cs_map[x] != x]
    r = comb.index(moved[-1])
    gamma = comb[(r + 1) % n]
    d_tree = right_comb(n - 2, "0") + ("10", "11")
    d = tree_map(comb, d_tree, n - 2 - r)
    _check(apply_to_address(d, moved[-1]) == "10" and apply_to_address(d, gamma) == "11",
           "d places the rightmost moved cone")
    e = conjugate(cs, d)
    f = commutator(cs, e)
    beta = ("10", apply_to_address(e, "10"), apply_to_address(cs, "10"))
    _check(f == cycle(beta), "commutator is the 3-cycle (10, 10e, 10c)")
    audit.update({"b": b, "c": c, "s": s, "c_shaped": cs, "d": d, "e": e, "f": f})

    cs_word = [words.t(invert(s)), words.A, words.t(compose(b, s))]
    if not is_small_support(f):
        _check(cs == swap("10", "11"), "full-support branch forces c = swap(10, 11)")
        inner = express_via_swap_and_T(cs, target)
        gen_word = cs_word
        branch = SWAP_BRANCH
    else:
        e_word = words.conjugate_word(cs_word, [words.t(d)])
        gen_word = words.simplify(words.inverse_word(cs_word) + words.inverse_word(e_word)
                                  + cs_word + e_word)
        inner = express_via_three_cycle_and_T(f, target)
        branch = THREE_CYCLE_BRANCH
    for name, el in inner.audit.items():
        audit["inner." + name] = el
    cert = Certificate([], target, audit, branch)
    shortcut = _shortcut(a, target)
    cert.word = shortcut if shortcut is not None else words.substitute(inner.word, gen_word)
    return cert


def certificate_problems(cert: Certificate, a: Element) -> list[str]:
    """Reasons the certificate fails to check; empty when it verifies."""
    problems = []
    for i, tok in enumerate(cert.word):
        if tok.kind == words.TELEM and not in_T(tok.payload):
            problems.append(f"token {i} is not an element of T")
    if problems:
        return problems
    try:
        value = words.evaluate(cert.word, a)
    except ThompsonError as exc:
        return [f"evaluation failed: {exc}"]
    if value != cert.target:
        problems.append("word does not evaluate to the target")
    return problems


def verify_certificate(cert: Certificate, a: Element) -> bool:
    return not certificate_problems(cert, a)


def double_coset_invariant(g: Element) -> int:
    """Number of cyclic descents of the image sequence, read in domain order.

    Unchanged by refinement and by multiplying on either side by elements of
    T; equal to 1 exactly on T.
    """
    if len(g) < 2:
        return 1
    rng = g.range
    n = len(rng)
    return sum(rng[i] > rng[(i + 1) % n] for i in range(n))
