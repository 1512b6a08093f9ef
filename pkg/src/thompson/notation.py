"""Text formats: addresses, elements, antichains and certificates.

Elements are written either as pair lists, one ``"x -> y"`` per line (or
comma separated on one line), with ``e`` for the root address, or in cycle
notation such as ``(00 110 010 101)(011 111)``.
"""

from __future__ import annotations

import re

from .addresses import antichain, format_address, incomparable, parse_address
from .elements import Element, cycles, make_element
from .errors import (
    NotFiniteOrder,
    ParseError,
    PreconditionError,
    SemanticError,
)
from .genmax import Certificate
from .structure import cycle_decomposition
from . import words

PAIRS = "pairs"
CYCLES = "cycles"

_ADDR = re.compile(r"[01]+|e")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse_cycles(text: str) -> list[list[str]]:
    groups = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", *_position(text, i))
        close = text.find(")", i)
        if close < 0:
            raise ParseError("unclosed '('", *_position(text, i))
        body = text[i + 1:close]
        if "(" in body:
            raise ParseError("nested '('", *_position(text, i + 1 + body.index("(")))
        group = []
        for m in re.finditer(r"\S+", body):
            tok = m.group()
            if not _ADDR.fullmatch(tok):
                raise ParseError(f"not an address: {tok!r}",
                                 *_position(text, i + 1 + m.start()))
            group.append(parse_address(tok))
        groups.append(group)
        i = close + 1
    return groups


def parse_pairs(text: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        col = 0
        for piece in line.split(","):
            stripped = piece.strip()
            if stripped:
                m = re.fullmatch(r"(\S+)\s*->\s*(\S+)", stripped)
                if not m or not _ADDR.fullmatch(m.group(1)) or not _ADDR.fullmatch(m.group(2)):
                    raise ParseError(f"expected 'address -> address', got {stripped!r}",
                                     lineno, col + len(piece) - len(piece.lstrip()) + 1)
                pairs.append((parse_address(m.group(1)), parse_address(m.group(2))))
            col += len(piece) + 1
    if not pairs:
        raise ParseError("empty element")
    return pairs


def parse_element(text: str) -> Element:
    stripped = text.strip()
    if stripped.startswith("("):
        groups = parse_cycles(stripped)
        flat = [x for g in groups for x in g]
        for i, x in enumerate(flat):
            for y in flat[i + 1:]:
                if not incomparable(x, y):
                    raise SemanticError(
                        f"cycle entries {format_address(x)} and {format_address(y)} "
                        "are comparable")
        return cycles(groups)
    pairs = parse_pairs(text)
    try:
        return make_element(pairs)
    except PreconditionError as exc:
        raise SemanticError(str(exc)) from exc


def print_element(g: Element, style: str = PAIRS, sep: str = "\n") -> str:
    if style == CYCLES:
        try:
            return str(cycle_decomposition(g))
        except NotFiniteOrder as exc:
            raise NotFiniteOrder(f"cycle notation needs a finite-order element: {exc}") from exc
    return sep.join(f"{format_address(d)} -> {format_address(r)}" for d, r in g.pairs)


def one_line(g: Element) -> str:
    return print_element(g, PAIRS, sep=", ")


def parse_address_list(text: str) -> list[str]:
    return [parse_address(tok) for tok in re.split(r"[\s,]+", text.strip()) if tok]


def parse_antichain(text: str) -> tuple[str, ...]:
    try:
        return antichain(parse_address_list(text))
    except PreconditionError as exc:
        raise SemanticError(str(exc)) from exc


def format_antichain(leaves) -> str:
    return " ".join(map(format_address, leaves))


def format_certificate(cert: Certificate) -> str:
    lines = ["target: " + one_line(cert.target)]
    for tok in cert.word:
        if tok.kind == words.TELEM:
            lines.append("T: " + one_line(tok.payload))
        else:
            lines.append(tok.kind)
    lines.append("audit:")
    if cert.branch is not None:
        lines.append("branch: " + cert.branch)
    for name, el in cert.audit.items():
        lines.append(f"{name}: {one_line(el)}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("target:"):
        raise ParseError("certificate must start with 'target:'", 1, 1)
    target = _element_at(lines[0][len("target:"):], 1)
    word = []
    i = 1
    while i < len(lines) and lines[i].strip() != "audit:":
        line = lines[i].strip()
        if line == words.GEN:
            word.append(words.A)
        elif line == words.GEN_INV:
            word.append(words.A_INV)
        elif line.startswith("T:"):
            word.append(words.t(_element_at(line[2:], i + 1)))
        elif line:
            raise ParseError(f"unknown token {line!r}", i + 1, 1)
        i += 1
    cert = Certificate(word, target)
    for j in range(i + 1, len(lines)):
        line = lines[j].strip()
        if not line:
            continue
        name, colon, rest = line.partition(":")
        if not colon:
            raise ParseError("expected 'name: element' in audit", j + 1, 1)
        name = name.strip()
        if name == "branch":
            cert.branch = rest.strip()
        else:
            cert.audit[name] = _element_at(rest, j + 1)
    return cert


def _element_at(text: str, lineno: int) -> Element:
    try:
        return parse_element(text)
    except ParseError as exc:
        raise ParseError(f"{exc}", lineno, 1) from exc
