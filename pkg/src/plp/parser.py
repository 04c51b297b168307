"""Recursive-descent parser for ordered logic programs.

Grammar::

    statement := rule | setdecl
    rule      := head [":-" body] "." | ":-" body "."
    head      := literal | prefatom
    body      := item ("," item)*
    item      := ["not"] ["neg"] atom | prefatom
    prefatom  := "(" term "<" term ")" | term "<" term
    setdecl   := constant ":" "[" term ("," term)* "]" "."

``%`` starts a comment running to the end of the line.  A ``name(T)`` body
atom names its rule and is removed from the body.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple

from .core import (
    BodyLiteral,
    Compound,
    Constant,
    Literal,
    OrderedProgram,
    PrefAtom,
    Rule,
    SetDecl,
    Variable,
    check_set_decl,
)
from .errors import ProgramError, SourceError

KEYWORDS = ("not", "neg")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|%[^\n]*)
  | (?P<ident>[a-z][A-Za-z0-9_]*)
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<punct>:-|[(),.:\[\]<-])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise SourceError(line, pos - line_start + 1, f"unexpected character {src[pos]!r}")
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            if kind == "punct":
                kind = text
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        nl = text.count("\n")
        if nl:
            line += nl
            line_start = pos + text.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src, absorb_names=True):
        self.toks = tokenize(src)
        self.i = 0
        self.absorb_names = absorb_names

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return SourceError(tok.line, tok.col, msg)

    def next(self):
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind):
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {found!r}")
        return self.next()

    def accept(self, kind):
        if self.tok.kind == kind:
            return self.next()
        return None

    def at_keyword(self, word):
        return self.tok.kind == "ident" and self.tok.text == word

    # -- terms

    def term(self):
        t = self.tok
        if t.kind == "var":
            self.next()
            return Variable(t.text)
        if t.kind == "int":
            self.next()
            return Constant(t.text)
        if t.kind == "ident":
            if t.text in KEYWORDS:
                raise self.error(f"keyword {t.text!r} cannot be used as a term")
            self.next()
            if self.accept("("):
                args = [self.term()]
                while self.accept(","):
                    args.append(self.term())
                self.expect(")")
                return Compound(t.text, tuple(args))
            return Constant(t.text)
        raise self.error(f"expected a term, found {t.text or 'end of input'!r}")

    def term_to_literal(self, term, tok, strong_neg=False):
        if isinstance(term, Compound):
            return Literal(term.functor, term.args, strong_neg)
        if isinstance(term, Constant) and not term.symbol.isdigit():
            return Literal(term.symbol, (), strong_neg)
        raise self.error(f"{term} is not an atom", tok)

    def pref_tail(self, lesser, paren):
        self.expect("<")
        greater = self.term()
        if paren:
            self.expect(")")
        return PrefAtom(lesser, greater)

    def literal_or_pref(self):
        """Head or positive body item without ``not``."""
        if self.accept("("):
            return self.pref_tail(self.term(), paren=True)
        if self.at_keyword("neg"):
            self.next()
            start = self.tok
            if self.at_keyword("not"):
                raise self.error("'neg not' is not allowed; write 'not neg'")
            return self.term_to_literal(self.term(), start, strong_neg=True)
        start = self.tok
        t = self.term()
        if self.tok.kind == "<":
            return self.pref_tail(t, paren=False)
        return self.term_to_literal(t, start)

    def body_item(self):
        if self.at_keyword("not"):
            self.next()
            if self.tok.kind == "(":
                raise self.error("preference atoms cannot occur under 'not'")
            strong = False
            if self.at_keyword("neg"):
                self.next()
                strong = True
            start = self.tok
            if self.at_keyword("not"):
                raise self.error("double 'not' is not allowed")
            lit = self.term_to_literal(self.term(), start, strong)
            if self.tok.kind == "<":
                raise self.error("preference atoms cannot occur under 'not'")
            return BodyLiteral(lit, naf=True)
        item = self.literal_or_pref()
        if isinstance(item, Literal):
            return BodyLiteral(item)
        return item

    # -- statements

    def statement(self):
        start = self.tok
        if self.accept(":-"):
            head = None
        else:
            head = self.literal_or_pref()
            if self.tok.kind == ":":
                return self.set_decl(head, start)
        body, name = [], None
        if head is None or self.accept(":-"):
            while True:
                item_tok = self.tok
                item = self.body_item()
                if self.is_name_atom(item):
                    if item.naf or item.lit.strong_neg:
                        raise self.error("a name atom cannot be negated", item_tok)
                    if name is not None:
                        raise self.error("rule has more than one name atom", item_tok)
                    name = item.lit.args[0]
                else:
                    body.append(item)
                if not self.accept(","):
                    break
        self.expect(".")
        if head is None and not body:
            raise self.error("a constraint needs a non-empty body", start)
        return Rule(head, tuple(body), name)

    def is_name_atom(self, item):
        return (
            self.absorb_names
            and isinstance(item, BodyLiteral)
            and item.lit.predicate == "name"
            and len(item.lit.args) == 1
        )

    def set_decl(self, head, start):
        if not (isinstance(head, Literal) and not head.args and not head.strong_neg):
            raise self.error("a set name must be a constant", start)
        self.expect(":")
        self.expect("[")
        members = [self.term()]
        while self.accept(","):
            members.append(self.term())
        self.expect("]")
        self.expect(".")
        return SetDecl(Constant(head.predicate), tuple(members))

    def program(self):
        rules, decls, positions = [], [], []
        while self.tok.kind != "eof":
            start = self.tok
            st = self.statement()
            if isinstance(st, SetDecl):
                decls.append((st, start))
            else:
                rules.append(st)
                positions.append(start)
        if self.absorb_names:
            self.validate(rules, positions, decls)
        return OrderedProgram(tuple(rules), tuple(d for d, _ in decls))

    def validate(self, rules, positions, decls):
        names = {}
        for rule, tok in zip(rules, positions):
            if rule.name is None:
                continue
            if rule.name in names:
                raise self.error(f"duplicate rule name {rule.name}", tok)
            names[rule.name] = tok
        set_names = set()
        for d, tok in decls:
            try:
                check_set_decl(d, names, set_names)
            except ProgramError as e:
                raise self.error(str(e), tok) from None
            set_names.add(d.set_name)


def parse_program(src: str, absorb_names: bool = True) -> OrderedProgram:
    """Parse program text.

    With ``absorb_names=False`` a ``name(T)`` body atom is kept as an ordinary
    literal; this reads back compiled programs, where ``name/1`` is a control
    predicate rather than a rule label.
    """
    return _Parser(src, absorb_names).program()


def parse_term(src: str):
    p = _Parser(src)
    t = p.term()
    p.expect("eof")
    return t


def parse_atoms(src: str, dash_negation: bool = False):
    """Parse a whitespace/comma separated sequence of ground atoms.

    Used for solver output; ``-p`` is read as ``neg p`` when ``dash_negation``
    is set.  Raises :class:`SourceError` on anything else.
    """
    p = _Parser(src)
    out = []
    while p.tok.kind != "eof":
        strong = False
        if dash_negation and p.accept("-"):
            strong = True
        start = p.tok
        out.append(p.term_to_literal(p.term(), start, strong))
        p.accept(",")
    return out
