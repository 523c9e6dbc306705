"""Reader and writer for the line-oriented ``.quiv`` text format.

Example::

    algebra notsolv
    vertices: 1 2
    arrows: a1:1->2; a2:1->2; b:2->1
    relations: b*a1, b*a2
    subalgebra kronecker
    arrows: a1, a2

Paths are written in application order with ``*`` between arrows, so
``b*a1`` means ``b`` followed by ``a1``. Sections may share a line when
separated by ``;``. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple, Union

from .errors import ParseError, ValidationError
from .field import QQ, Field
from .quiver import Arrow, MonomialAlgebra, Quiver, SubalgebraPair

_HEADER = re.compile(
    r"(?<![\w'*^])(?:(?P<block>subalgebra|algebra)[ \t]+(?P<name>[^\s;:,#]+)"
    r"|(?P<key>vertices|arrows|relations)[ \t]*:)")
_NAME = re.compile(r"^[\w'^]+\**$")
_ARROW = re.compile(r"^(?P<name>[^\s:;,]+)\s*:\s*(?P<s>[+-]?\d+)\s*(?:->|→)\s*(?P<t>[+-]?\d+)$")
_NONE = "(none)"


class _Source:
    def __init__(self, text: str):
        self.text = text
        self._starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                self._starts.append(i + 1)

    def where(self, offset: int) -> Tuple[int, int]:
        lo, hi = 0, len(self._starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, offset - self._starts[lo] + 1

    def error(self, msg: str, offset: int) -> ParseError:
        line, col = self.where(offset)
        return ParseError(msg, line, col)


def _strip_comments(text: str) -> str:
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def _items(body: str, offset: int, seps: str) -> List[Tuple[str, int]]:
    """Split ``body`` on any char in ``seps``; returns (stripped item, offset)."""
    out = []
    start = 0
    for i, ch in enumerate(body + seps[0]):
        if ch in seps or i == len(body):
            chunk = body[start:i]
            s = chunk.strip()
            if s:
                out.append((s, offset + start + chunk.index(s)))
            start = i + 1
    return out


def _split_path(token: str, names: set) -> List[List[str]]:
    """All ways to read ``token`` as known arrow names joined by ``*``."""
    results = []

    def go(i, acc):
        if i == len(token):
            results.append(list(acc))
            return
        for n in names:
            if token.startswith(n, i):
                j = i + len(n)
                if j == len(token):
                    go(j, acc + [n])
                elif token[j] == "*" and j + 1 < len(token):
                    go(j + 1, acc + [n])

    go(0, [])
    return results


def parse_path(token: str, quiver: Quiver) -> List[str]:
    token = re.sub(r"\s+", "", token)
    parses = _split_path(token, set(quiver.arrow_names))
    if not parses:
        raise ValidationError(f"cannot read {token!r} as a path of known arrows")
    if len(parses) > 1:
        raise ValidationError(f"path {token!r} is ambiguous: "
                              + " or ".join("*".join(p) for p in parses))
    return parses[0]


def _sections(src: _Source):
    text = _strip_comments(src.text)
    marks = list(_HEADER.finditer(text))
    if not marks:
        raise ParseError("no sections found; expected 'vertices:'", 1, 1)
    lead = text[:marks[0].start()].strip(" \t\n;")
    if lead:
        raise src.error(f"unexpected text {lead.split()[0]!r}", text.index(lead))
    out = []
    for k, m in enumerate(marks):
        end = marks[k + 1].start() if k + 1 < len(marks) else len(text)
        body = text[m.end():end]
        if m.group("block"):
            rest = body.strip(" \t\n;")
            if rest and m.group("block"):
                raise src.error(f"unexpected text after {m.group('block')} header",
                                m.end() + body.index(rest))
            out.append((m.group("block"), m.group("name"), m.start(), m.end()))
        else:
            out.append((m.group("key"), body, m.start(), m.end()))
    return out


def parse_input(text: str, field: Field = QQ) -> Union[MonomialAlgebra, SubalgebraPair]:
    """Parse a ``.quiv`` document into an algebra, or a pair if a subalgebra is given."""
    src = _Source(text)
    secs = _sections(src)
    name = "A"
    sub_name: Optional[str] = None
    blocks = {"algebra": {}, "subalgebra": {}}
    current = "algebra"
    seen_block = False
    for kind, body, start, end in secs:
        if kind in ("algebra", "subalgebra"):
            if kind == "algebra":
                if seen_block or blocks["algebra"]:
                    raise src.error("'algebra' header must come first", start)
                name = body
            else:
                if current == "subalgebra":
                    raise src.error("only one subalgebra block is allowed", start)
                current = "subalgebra"
                sub_name = body
            seen_block = True
            continue
        blk = blocks[current]
        if kind in blk:
            raise src.error(f"duplicate '{kind}:' section", start)
        blk[kind] = (body, end)

    amb = blocks["algebra"]
    for key in ("vertices", "arrows"):
        if key not in amb:
            raise ParseError(f"missing '{key}:' section", 1, 1)

    body, off = amb["vertices"]
    vertices = []
    for tok, pos in _items(body, off, " \t\n,;"):
        try:
            vertices.append(int(tok))
        except ValueError:
            raise src.error(f"vertex id {tok!r} is not an integer", pos) from None
    if not vertices:
        raise src.error("no vertices declared", off)

    body, off = amb["arrows"]
    arrows = []
    items = _items(body, off, ";\n")
    if not (len(items) == 1 and items[0][0] == _NONE):
        for tok, pos in items:
            m = _ARROW.match(tok)
            if not m:
                raise src.error(f"malformed arrow declaration {tok!r}; expected NAME:SRC->TGT", pos)
            if not _NAME.match(m.group("name")):
                raise src.error(f"invalid arrow name {m.group('name')!r}", pos)
            arrows.append(Arrow(m.group("name"), int(m.group("s")), int(m.group("t"))))
    quiver = Quiver(vertices, arrows)

    rels = []
    if "relations" in amb:
        body, off = amb["relations"]
        items = _items(body, off, ",;\n")
        if not (len(items) == 1 and items[0][0] == _NONE):
            for tok, pos in items:
                try:
                    rels.append(quiver.path(parse_path(tok, quiver)))
                except ValidationError as e:
                    raise src.error(str(e), pos) from None
    algebra = MonomialAlgebra(quiver, rels, field, name)

    if sub_name is None:
        if blocks["subalgebra"]:
            raise ParseError("subalgebra sections without a 'subalgebra' header")
        return algebra
    sub = blocks["subalgebra"]
    if "vertices" in sub:
        raise src.error("subalgebra block takes no 'vertices:' section", sub["vertices"][1])
    if "arrows" not in sub:
        raise ParseError("subalgebra block is missing 'arrows:'")
    body, off = sub["arrows"]
    names = []
    items = _items(body, off, ", \t\n;")
    if not (len(items) == 1 and items[0][0] == _NONE):
        for tok, pos in items:
            if not quiver.has_arrow(tok):
                raise src.error(f"subalgebra arrow {tok!r} is not an arrow of the algebra", pos)
            if tok in names:
                raise src.error(f"duplicate subalgebra arrow {tok!r}", pos)
            names.append(tok)
    pair = SubalgebraPair.from_arrows(algebra, names, sub_name)
    if "relations" in sub:
        body, off = sub["relations"]
        items = _items(body, off, ",;\n")
        given = set()
        if not (len(items) == 1 and items[0][0] == _NONE):
            for tok, pos in items:
                try:
                    given.add(tuple(parse_path(tok, pair.sub.quiver)))
                except ValidationError as e:
                    raise src.error(str(e), pos) from None
        expected = {r.arrows for r in pair.sub.relations}
        if given != expected:
            raise ValidationError(
                "relations of B must be exactly the relations of A supported on B's arrows")
    return pair


def format_algebra(algebra: MonomialAlgebra, sub_arrows=None, sub_name: str = "B") -> str:
    """Inverse of :func:`parse_input`."""
    q = algebra.quiver
    lines = [f"algebra {algebra.name}",
             "vertices: " + " ".join(map(str, q.vertices)),
             "arrows: " + ("; ".join(f"{a.name}:{a.source}->{a.target}" for a in q.arrows)
                           or _NONE),
             "relations: " + (", ".join(str(r) for r in algebra.relations) or _NONE)]
    if sub_arrows is not None:
        order = [a.name for a in q.arrows if a.name in set(sub_arrows)]
        lines += [f"subalgebra {sub_name}", "arrows: " + (", ".join(order) or _NONE)]
    return "\n".join(lines) + "\n"


def format_pair(pair: SubalgebraPair) -> str:
    return format_algebra(pair.ambient, pair.sub_arrow_names, pair.sub.name)


def load(path: str, field: Field = QQ):
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read(), field)
