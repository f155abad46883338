"""Text format for quiver presentations.

    field F 101
    quiver
      vertices 1 2
      arrow a : 1 -> 1
      arrow b : 2 -> 1
      arrow g : 2 -> 2
    relations
      a*a*a
      g*g
      g*b

`a*b` is the path a followed by b.  A leading all-digit token followed by `*`
at the start of a term is a coefficient; relations are separated by token
position (a new relation starts wherever a term is not preceded by + or -).
"""

from __future__ import annotations

from dataclasses import dataclass

from sgsplit.errors import DSLError
from sgsplit.linalg import GF, QQ, Field
from sgsplit.quiver import Arrow, LinComb, Path, Quiver, build_quotient, validate_relation

_PUNCT = {"*", "+", "-", ":", "->"}


@dataclass
class Token:
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    toks = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        n = len(line)
        while col < n:
            c = line[col]
            if c.isspace():
                col += 1
                continue
            if line.startswith("->", col):
                toks.append(Token("->", ln, col + 1))
                col += 2
                continue
            if c in "*+-:":
                toks.append(Token(c, ln, col + 1))
                col += 1
                continue
            start = col
            while col < n and not line[col].isspace() and line[col] not in "*+-:" \
                    and not line.startswith("->", col):
                col += 1
            toks.append(Token(line[start:col], ln, start + 1))
    return toks


@dataclass
class PresentationFile:
    field: Field
    field_decl: str  # "Q" or "F <p>"
    vertices: tuple
    arrows: tuple  # of Arrow
    relations: list  # of LinComb


class _Parser:
    def __init__(self, text: str, field_override: Field | None = None):
        self.toks = _tokenize(text)
        self.pos = 0
        self.field_override = field_override

    def _err(self, msg: str, tok: Token | None = None):
        if tok is None:
            tok = self.toks[self.pos] if self.pos < len(self.toks) else None
        if tok is None:
            raise DSLError(msg + " (at end of input)")
        raise DSLError(msg, line=tok.line, col=tok.col)

    def peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> Token:
        t = self.peek()
        if t is None:
            raise DSLError("unexpected end of input")
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t is None or t.text != text:
            self._err(f"expected '{text}'")
        return self.next()

    def ident(self) -> Token:
        t = self.peek()
        if t is None or t.text in _PUNCT or t.text in ("field", "quiver", "vertices",
                                                       "arrow", "relations"):
            self._err("expected an identifier")
        return self.next()

    def parse(self) -> PresentationFile:
        self.expect("field")
        t = self.next()
        if t.text == "Q":
            field, decl = QQ, "Q"
        elif t.text == "F":
            p = self.next()
            if not p.text.isdigit():
                self._err("expected a prime after 'F'", p)
            q = int(p.text)
            if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
                self._err(f"{q} is not prime", p)
            field, decl = GF(q), f"F {q}"
        else:
            self._err("expected 'Q' or 'F <prime>'", t)
        if self.field_override is not None:
            field = self.field_override
            decl = "Q" if field.is_rational else f"F {field.char}"

        self.expect("quiver")
        self.expect("vertices")
        vertices = []
        while self.peek() is not None and self.peek().text not in ("arrow", "relations"):
            v = self.ident()
            if v.text in vertices:
                self._err(f"duplicate vertex '{v.text}'", v)
            vertices.append(v.text)
        if not vertices:
            self._err("at least one vertex required")

        arrows = []
        names = set(vertices)
        while self.peek() is not None and self.peek().text == "arrow":
            self.next()
            name = self.ident()
            if name.text in names:
                self._err(f"duplicate identifier '{name.text}'", name)
            self.expect(":")
            src = self.ident()
            if src.text not in vertices:
                self._err(f"undeclared vertex '{src.text}'", src)
            self.expect("->")
            tgt = self.ident()
            if tgt.text not in vertices:
                self._err(f"undeclared vertex '{tgt.text}'", tgt)
            arrows.append(Arrow(name.text, src.text, tgt.text))
            names.add(name.text)

        quiver = Quiver(tuple(vertices), tuple(arrows))
        arrow_by_name = {a.name: a for a in arrows}

        relations = []
        if self.peek() is not None:
            self.expect("relations")
            while self.peek() is not None:
                relations.append(self._relation(field, quiver, arrow_by_name))
        return PresentationFile(field, decl, tuple(vertices), tuple(arrows), relations)

    def _term(self, field, arrow_by_name):
        """(coefficient, Path, first token).  Consumes `c * w1 * w2 * ...`."""
        first = self.peek()
        coeff = field.one
        t = self.ident()
        nxt = self.peek()
        if t.text.isdigit() and nxt is not None and nxt.text == "*":
            coeff = field.of(int(t.text))
            self.next()
            t = self.ident()
        arrows = []

        def push(tok):
            a = arrow_by_name.get(tok.text)
            if a is None:
                self._err(f"undeclared arrow '{tok.text}'", tok)
            if arrows and arrows[-1].target != a.source:
                self._err(f"'{arrows[-1].name}' and '{a.name}' do not compose", tok)
            arrows.append(a)

        push(t)
        while self.peek() is not None and self.peek().text == "*":
            self.next()
            push(self.ident())
        p = Path(arrows[0].source, arrows[-1].target, tuple(a.name for a in arrows))
        return coeff, p, first

    def _relation(self, field, quiver, arrow_by_name) -> LinComb:
        coeff, p, first = self._term(field, arrow_by_name)
        if len(p.arrows) < 2:
            self._err("relation generators must be paths of length at least 2", first)
        lc = {p: coeff}
        proto = p
        while self.peek() is not None and self.peek().text in ("+", "-"):
            sign = self.next()
            coeff, p, tok = self._term(field, arrow_by_name)
            if len(p.arrows) < 2:
                self._err("relation generators must be paths of length at least 2", tok)
            if (p.source, p.target) != (proto.source, proto.target):
                self._err("relation mixes non-parallel paths", tok)
            c = field.neg(coeff) if sign.text == "-" else coeff
            lc[p] = field.add(lc.get(p, field.zero), c)
        lc = {p: c for p, c in lc.items() if c != field.zero}
        if not lc:
            self._err("relation is identically zero", first)
        validate_relation(quiver, field, lc)
        return lc


def parse(text: str, field_override: Field | None = None) -> PresentationFile:
    return _Parser(text, field_override).parse()


def build(pf: PresentationFile, max_len: int = 30):
    quiver = Quiver(pf.vertices, pf.arrows)
    return build_quotient(quiver, pf.relations, pf.field, max_len)


def pretty_print(pf: PresentationFile) -> str:
    lines = [f"field {pf.field_decl}", "quiver", "  vertices " + " ".join(pf.vertices)]
    for a in pf.arrows:
        lines.append(f"  arrow {a.name} : {a.source} -> {a.target}")
    if pf.relations:
        lines.append("relations")
        f = pf.field
        for lc in pf.relations:
            terms = []
            for p, c in sorted(lc.items(), key=lambda kv: (len(kv[0].arrows), kv[0].arrows)):
                word = "*".join(p.arrows)
                if f.is_rational and c < 0:
                    sign, mag = "-", -c
                else:
                    sign, mag = "+", c
                piece = word if mag == f.one else f"{int(mag)}*{word}"
                terms.append((sign, piece))
            # the grammar has no leading sign, so start with a positive term
            terms.sort(key=lambda t: t[0] == "-")
            parts = [terms[0][1]] + [f"{s} {w}" for s, w in terms[1:]]
            lines.append("  " + " ".join(parts))
    return "\n".join(lines) + "\n"
