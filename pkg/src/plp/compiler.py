"""Compile ordered logic programs into regular extended logic programs.

Each named rule ``n`` is split into an application rule guarded by ``ok(n)``
and a family of blocking rules; ``ok(n)`` becomes derivable only once every
rule ``m`` preferred over ``n`` (``prec(n, m)``) is known to be applied
(``ap(m)``) or blocked (``bl(m)``).  The answer sets of the output are the
preferred answer sets of the input.

The input must be ground with constant names (see :mod:`plp.grounder`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .core import (
    BodyLiteral,
    Constant,
    Literal,
    OrderedProgram,
    PrefAtom,
    Rule,
    SetDecl,
    check_program,
)
from .errors import CompileError, ProgramError

CONTROL_PREDICATES = frozenset(
    {
        "name", "ap", "bl", "ok", "oko", "prec", "neg_prec",
        "memb", "allap", "blset", "resolved", "okset", "setname",
    }
)
NEG_PREFIX = "neg_"


def _atom(pred, *args):
    return Literal(pred, args)


def _pos(pred, *args):
    return BodyLiteral(Literal(pred, args))


def _naf(pred, *args):
    return BodyLiteral(Literal(pred, args), naf=True)


@dataclass(frozen=True)
class CompiledProgram:
    """A regular (preference-free, strong-negation-free) ground program."""

    rules: Tuple[Rule, ...] = ()

    control_predicates = CONTROL_PREDICATES

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))

    @classmethod
    def from_text(cls, src: str) -> "CompiledProgram":
        from .parser import parse_program

        p = parse_program(src, absorb_names=False)
        if p.set_decls:
            raise CompileError("compiled programs contain no set declarations")
        return cls(p.rules)

    def __str__(self):
        return "".join(f"{r}\n" for r in self.rules)

    def __len__(self):
        return len(self.rules)


def erase_order(p: OrderedProgram) -> OrderedProgram:
    """Drop names, set declarations, preference-headed rules and preference body atoms."""
    rules = []
    for r in p.rules:
        if isinstance(r.head, PrefAtom):
            continue
        body = tuple(b for b in r.body if not isinstance(b, PrefAtom))
        if r.head is None and not body:
            continue
        rules.append(Rule(r.head, body))
    return OrderedProgram(tuple(rules))


def _check_input(p: OrderedProgram):
    if not p.is_ground():
        raise CompileError("compile needs a ground program; run the grounder first")
    for d in p.set_decls:
        for t in (d.set_name, *d.members):
            if not isinstance(t, Constant):
                raise CompileError(f"set term {t} is not a constant; run flatten_names first")
    for r in p.rules:
        if r.name is not None and not isinstance(r.name, Constant):
            raise CompileError(f"rule name {r.name} is not a constant; run flatten_names first")
        for item in (r.head, *r.body):
            if isinstance(item, PrefAtom):
                for t in (item.lesser, item.greater):
                    if not isinstance(t, Constant):
                        raise CompileError(f"preference term {t} is not a constant")
                continue
            lit = item.lit if isinstance(item, BodyLiteral) else item
            if lit is None:
                continue
            if lit.predicate in CONTROL_PREDICATES:
                raise CompileError(f"predicate {lit.predicate} is reserved for control atoms")
            if lit.predicate.startswith(NEG_PREFIX):
                raise CompileError(
                    f"predicate {lit.predicate} clashes with the {NEG_PREFIX} prefix used for strong negation"
                )
    try:
        check_program(p)
    except ProgramError as e:
        raise CompileError(str(e)) from None


def _pref_atoms(p: OrderedProgram):
    for r in p.rules:
        for item in (r.head, *r.body):
            if isinstance(item, PrefAtom):
                yield item


def with_singleton_sets(p: OrderedProgram) -> OrderedProgram:
    """Rewrite rule-level preferences in a set-ordered program to singleton sets.

    A rule name ``n`` used in a preference atom is replaced by an existing
    set declared as ``[n]``, or by a freshly declared singleton set.
    """
    set_names = set(p.set_names)
    rule_names = set(p.names)
    singleton = {d.members[0]: d.set_name for d in p.set_decls if len(d.members) == 1}
    taken = set_names | rule_names
    new_decls = []
    mapping: Dict[Constant, Constant] = {}

    for pa in _pref_atoms(p):
        for t in (pa.lesser, pa.greater):
            if t in set_names or t in mapping:
                continue
            if t not in rule_names:
                raise CompileError(f"preference term {t} names neither a rule nor a set")
            if t in singleton:
                mapping[t] = singleton[t]
                continue
            fresh = f"set_{t.symbol}"
            while Constant(fresh) in taken:
                fresh += "_"
            mapping[t] = Constant(fresh)
            taken.add(mapping[t])
            new_decls.append(SetDecl(mapping[t], (t,)))

    if not mapping:
        return p

    def fix(item):
        if isinstance(item, PrefAtom):
            return PrefAtom(mapping.get(item.lesser, item.lesser), mapping.get(item.greater, item.greater))
        return item

    rules = tuple(Rule(fix(r.head), tuple(fix(b) for b in r.body), r.name) for r in p.rules)
    return OrderedProgram(rules, p.set_decls + tuple(new_decls))


def compile_sets(p: OrderedProgram) -> List[Rule]:
    """Control rules for a set-ordered program.

    A set ``m`` is resolved once all of its rules are applied or one of them is
    blocked.  A rule becomes ok as soon as some set containing it has every set
    preferred over it resolved; rules in no set are ok unconditionally.
    """
    decls = p.set_decls
    if not decls:
        return []
    set_names = [d.set_name for d in decls]
    known = set(set_names)
    for pa in _pref_atoms(p):
        for t in (pa.lesser, pa.greater):
            if t not in known:
                raise CompileError(f"preference term {t} is not a set name")

    out = []
    for d in decls:
        out.append(Rule(_atom("setname", d.set_name)))
        out += [Rule(_atom("memb", d.set_name, n)) for n in d.members]
    for d in decls:
        s = d.set_name
        out.append(Rule(_atom("allap", s), tuple(_pos("ap", n) for n in d.members)))
        out += [Rule(_atom("blset", s), (_pos("bl", n),)) for n in d.members]
        out.append(Rule(_atom("resolved", s), (_pos("allap", s),)))
        out.append(Rule(_atom("resolved", s), (_pos("blset", s),)))
    for s in set_names:
        out.append(Rule(_atom("okset", s, s), (_pos("setname", s),)))
    for s in set_names:
        for m in set_names:
            guard = (_pos("setname", s), _pos("setname", m))
            out.append(Rule(_atom("okset", s, m), guard + (_naf("prec", s, m),)))
            out.append(Rule(_atom("okset", s, m), guard + (_pos("prec", s, m), _pos("resolved", m))))
    for n in p.names:
        containing = [d.set_name for d in decls if n in d.members]
        if not containing:
            out.append(Rule(_atom("ok", n), (_pos("name", n),)))
        for s in containing:
            out.append(Rule(_atom("ok", n), (_pos("name", n), *(_pos("okset", s, m) for m in set_names))))
    return out


class _Translator:
    def __init__(self, coherence):
        self.coherence = coherence
        self.negated = {}  # compiled neg_q atom -> q atom, in first-seen order

    def literal(self, lit: Literal) -> Literal:
        if not lit.strong_neg:
            return lit
        out = Literal(NEG_PREFIX + lit.predicate, lit.args)
        self.negated.setdefault(out, lit.complement())
        return out

    def head(self, h):
        if h is None:
            return None
        if isinstance(h, PrefAtom):
            return _atom("prec", h.lesser, h.greater)
        return self.literal(h)

    def body_item(self, b) -> BodyLiteral:
        if isinstance(b, PrefAtom):
            return _pos("prec", b.lesser, b.greater)
        return BodyLiteral(self.literal(b.lit), b.naf)

    def coherence_constraints(self):
        if not self.coherence:
            return []
        return [Rule(None, (BodyLiteral(pos), BodyLiteral(neg))) for neg, pos in self.negated.items()]


def compile(p: OrderedProgram, coherence: bool = True, emit_neg_prec: bool = False) -> CompiledProgram:
    """Translate a ground, name-flattened ordered program.

    ``coherence`` adds ``:- q, neg_q.`` for every strongly negated atom;
    ``emit_neg_prec`` adds ``neg_prec(m, n) :- ..., prec(n, m).`` rules.
    """
    _check_input(p)
    set_mode = bool(p.set_decls)
    names = p.names
    if set_mode:
        p = with_singleton_sets(p)
    else:
        known = set(names)
        for pa in _pref_atoms(p):
            for t in (pa.lesser, pa.greater):
                if t not in known:
                    raise CompileError(f"preference term {t} is not the name of a rule")

    tr = _Translator(coherence)
    out: List[Rule] = []

    for r in p.rules:
        if r.name is None:
            out.append(Rule(tr.head(r.head), tuple(tr.body_item(b) for b in r.body)))

    for r in p.rules:
        n = r.name
        if n is None:
            continue
        body = [tr.body_item(b) for b in r.body]
        head = tr.head(r.head)
        if head is not None:
            out.append(Rule(head, (_pos("ap", n),)))
        else:
            # a named constraint: applying it is a contradiction
            out.append(Rule(None, (_pos("ap", n),)))
        out.append(Rule(_atom("ap", n), (_pos("ok", n), *body)))
        for b in body:
            out.append(Rule(_atom("bl", n), (_pos("ok", n), BodyLiteral(b.lit, naf=not b.naf))))

    if set_mode:
        ordered, guard = p.set_names, "setname"
    else:
        ordered, guard = names, "name"
        for n in names:
            out.append(Rule(_atom("ok", n), (_pos("name", n), *(_pos("oko", n, m) for m in names))))
        for n in names:
            out.append(Rule(_atom("oko", n, n), (_pos("name", n),)))
        for n in names:
            for m in names:
                g = (_pos("name", n), _pos("name", m))
                out.append(Rule(_atom("oko", n, m), g + (_naf("prec", n, m),)))
                out.append(Rule(_atom("oko", n, m), g + (_pos("prec", n, m), _pos("ap", m))))
                out.append(Rule(_atom("oko", n, m), g + (_pos("prec", n, m), _pos("bl", m))))

    if emit_neg_prec:
        for n in ordered:
            for m in ordered:
                out.append(Rule(_atom("neg_prec", m, n), (_pos(guard, n), _pos(guard, m), _pos("prec", n, m))))

    out += [Rule(_atom("name", n)) for n in names]
    out += tr.coherence_constraints()
    if set_mode:
        out += compile_sets(p)
    return CompiledProgram(tuple(out))
