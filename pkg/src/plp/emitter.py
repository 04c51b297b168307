"""Program serialization, the ``nice`` answer-set filter, and answer-set I/O.

Dialects:

``core``
    The parser's own grammar; round-trips through :func:`plp.parser.parse_program`.
``dlv`` / ``smodels``
    Ground rules in the shared ASP syntax (``:-``, ``not``, ``-`` for strong
    negation).  They differ only in how solver output is read back: DLV prints
    ``{a, b}`` groups, smodels prints ``Stable Model: a b`` lines.
"""

from __future__ import annotations

import re
from typing import List

from .compiler import CONTROL_PREDICATES, NEG_PREFIX, CompiledProgram
from .core import AnswerSet, BodyLiteral, Literal, OrderedProgram, PrefAtom, Rule
from .errors import AnswerSetFormatError, EmitError, SourceError
from .parser import parse_atoms

DIALECTS = ("core", "dlv", "smodels")
HIDDEN_PREDICATES = CONTROL_PREDICATES | {"true"}


def _asp_literal(lit: Literal) -> str:
    return ("-" if lit.strong_neg else "") + lit.atom_str


def _asp_item(item) -> str:
    if isinstance(item, PrefAtom):
        return f"prec({item.lesser}, {item.greater})"
    if isinstance(item, BodyLiteral):
        return ("not " if item.naf else "") + _asp_literal(item.lit)
    return _asp_literal(item)


def _asp_rule(r: Rule) -> str:
    items = [_asp_item(b) for b in r.body]
    if r.name is not None:
        items.insert(0, f"name({r.name})")
    head = "" if r.head is None else _asp_item(r.head)
    if not items:
        return f"{head}."
    return f"{head} :- {', '.join(items)}." if head else f":- {', '.join(items)}."


def emit(p, dialect: str = "core") -> str:
    """Render a CompiledProgram or OrderedProgram, one statement per line."""
    if dialect not in DIALECTS:
        raise EmitError(f"unknown dialect {dialect!r}")
    if dialect == "core":
        return str(p)
    if isinstance(p, OrderedProgram):
        if not p.is_ground():
            raise EmitError(f"the {dialect} dialect needs a ground program")
        if p.set_decls:
            raise EmitError(f"set declarations have no {dialect} rendering; use the core dialect")
    elif not isinstance(p, CompiledProgram):
        raise EmitError(f"cannot emit {type(p).__name__}")
    return "".join(_asp_rule(r) + "\n" for r in p.rules)


def filter_nice(x: AnswerSet) -> AnswerSet:
    """Hide control atoms and show compiled ``neg_q`` atoms as ``neg q``."""
    out = set()
    for lit in x:
        if lit.predicate in HIDDEN_PREDICATES:
            continue
        if not lit.strong_neg and lit.predicate.startswith(NEG_PREFIX):
            lit = Literal(lit.predicate[len(NEG_PREFIX):], lit.args, True)
        out.add(lit)
    return AnswerSet(frozenset(out))


def render_answer_set(x: AnswerSet, dialect: str = "core") -> str:
    if dialect == "core":
        return str(x)
    atoms = sorted(_asp_literal(l) for l in x)
    if dialect == "dlv":
        return "{" + ", ".join(atoms) + "}"
    if dialect == "smodels":
        return " ".join(["Stable Model:", *atoms])
    raise EmitError(f"unknown dialect {dialect!r}")


def render_answer_sets(sets, dialect: str = "core") -> str:
    return "".join(render_answer_set(x, dialect) + "\n" for x in sets)


_BRACES = re.compile(r"\{([^{}]*)\}")
_STABLE = "Stable Model:"


def _atoms(text, line):
    try:
        return AnswerSet(frozenset(parse_atoms(text, dash_negation=True)))
    except (SourceError, ValueError):
        raise AnswerSetFormatError(line) from None


def parse_answer_sets(out: str, dialect: str = "dlv") -> List[AnswerSet]:
    """Read answer sets from a solver transcript.

    ``dlv``: every ``{...}`` group (possibly spanning lines) is one set.
    ``smodels``: every line starting with ``Stable Model:`` is one set.
    """
    if dialect == "dlv":
        sets = []
        for m in _BRACES.finditer(out):
            line = out[m.start():m.end()]
            sets.append(_atoms(m.group(1), line))
        return sets
    if dialect == "smodels":
        return [
            _atoms(line.strip()[len(_STABLE):], line)
            for line in out.splitlines()
            if line.strip().startswith(_STABLE)
        ]
    raise EmitError(f"cannot parse answer sets in dialect {dialect!r}")
