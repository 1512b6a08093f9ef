"""Words over a generator ``A``, its inverse and explicit elements of T.

A word is a plain list of :class:`Token`.  Generator tokens carry no payload;
the generator is bound when the word is evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .elements import IDENTITY, Element, compose, invert

GEN = "A"
GEN_INV = "A^-1"
TELEM = "T"


@dataclass(frozen=True)
class Token:
    kind: str
    payload: Element | None = None

    def inverse(self) -> "Token":
        if self.kind == GEN:
            return A_INV
        if self.kind == GEN_INV:
            return A
        return Token(TELEM, invert(self.payload))


A = Token(GEN)
A_INV = Token(GEN_INV)


def t(element: Element) -> Token:
    return Token(TELEM, element)


def inverse_word(word: Sequence[Token]) -> list[Token]:
    return [tok.inverse() for tok in reversed(word)]


def conjugate_word(word: Sequence[Token], by: Sequence[Token]) -> list[Token]:
    """Word for ``by^-1 word by``."""
    return simplify(inverse_word(by) + list(word) + list(by))


def power_word(word: Sequence[Token], n: int) -> list[Token]:
    if n < 0:
        return power_word(inverse_word(word), -n)
    return simplify(list(word) * n)


def substitute(word: Iterable[Token], image: Sequence[Token]) -> list[Token]:
    """Replace the generator by ``image`` (and its inverse by the inverse word)."""
    image = list(image)
    image_inv = inverse_word(image)
    out: list[Token] = []
    for tok in word:
        if tok.kind == GEN:
            out.extend(image)
        elif tok.kind == GEN_INV:
            out.extend(image_inv)
        else:
            out.append(tok)
    return simplify(out)


def simplify(word: Iterable[Token]) -> list[Token]:
    """Free reduction: merge neighbouring T tokens, drop identities, cancel A A^-1."""
    out: list[Token] = []
    for tok in word:
        if tok.kind == TELEM:
            if out and out[-1].kind == TELEM:
                merged = compose(out.pop().payload, tok.payload)
                if not merged.is_identity():
                    out.append(t(merged))
            elif not tok.payload.is_identity():
                out.append(tok)
        elif out and out[-1].kind != TELEM and out[-1].kind != tok.kind:
            out.pop()
        else:
            out.append(tok)
    return out


def evaluate(word: Iterable[Token], a: Element) -> Element:
    a_inv = invert(a)
    result = IDENTITY
    for tok in word:
        if tok.kind == GEN:
            result = compose(result, a)
        elif tok.kind == GEN_INV:
            result = compose(result, a_inv)
        else:
            result = compose(result, tok.payload)
    return result


def generator_count(word: Iterable[Token]) -> int:
    return sum(tok.kind != TELEM for tok in word)
