"""Terms, literals, rules and programs.

Every type here is an immutable dataclass; ``str()`` renders the canonical
surface syntax read back by :mod:`plp.parser`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from .errors import ProgramError

_CONST_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z|[0-9]+\Z")
_VAR_RE = re.compile(r"[A-Z_][A-Za-z0-9_]*\Z")
_IDENT_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class Constant:
    symbol: str

    def __post_init__(self):
        if isinstance(self.symbol, int):
            object.__setattr__(self, "symbol", str(self.symbol))
        if not _CONST_RE.match(self.symbol):
            raise ValueError(f"bad constant symbol {self.symbol!r}")

    def __str__(self):
        return self.symbol


@dataclass(frozen=True, order=True)
class Variable:
    name: str

    def __post_init__(self):
        if not _VAR_RE.match(self.name):
            raise ValueError(f"bad variable name {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Compound:
    functor: str
    args: Tuple["Term", ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not _IDENT_RE.match(self.functor):
            raise ValueError(f"bad functor {self.functor!r}")
        if not self.args:
            raise ValueError("compound term needs at least one argument")

    @property
    def arity(self):
        return len(self.args)

    def __str__(self):
        return f"{self.functor}({', '.join(map(str, self.args))})"


Term = Union[Constant, Variable, Compound]


@dataclass(frozen=True)
class Literal:
    """An atom, optionally under classical negation (surface ``neg``)."""

    predicate: str
    args: Tuple[Term, ...] = ()
    strong_neg: bool = False

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not _IDENT_RE.match(self.predicate):
            raise ValueError(f"bad predicate {self.predicate!r}")

    def complement(self):
        return Literal(self.predicate, self.args, not self.strong_neg)

    @property
    def atom_str(self):
        if not self.args:
            return self.predicate
        return f"{self.predicate}({', '.join(map(str, self.args))})"

    def __str__(self):
        return ("neg " if self.strong_neg else "") + self.atom_str


@dataclass(frozen=True)
class BodyLiteral:
    lit: Literal
    naf: bool = False

    def __str__(self):
        return ("not " if self.naf else "") + str(self.lit)


@dataclass(frozen=True)
class PrefAtom:
    """``lesser < greater``: the rule (or set) named ``greater`` wins."""

    lesser: Term
    greater: Term

    def __str__(self):
        return f"{self.lesser} < {self.greater}"


Head = Union[Literal, PrefAtom, None]
BodyItem = Union[BodyLiteral, PrefAtom]


@dataclass(frozen=True)
class Rule:
    head: Head
    body: Tuple[BodyItem, ...] = ()
    name: Optional[Term] = None

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        if self.head is None and not self.body:
            raise ValueError("a constraint needs a non-empty body")

    @property
    def is_fact(self):
        return not self.body

    @property
    def is_constraint(self):
        return self.head is None

    def __str__(self):
        items = [str(b) for b in self.body]
        if self.name is not None:
            items.insert(0, f"name({self.name})")
        head = "" if self.head is None else str(self.head)
        if not items:
            return f"{head}."
        if self.head is None:
            return f":- {', '.join(items)}."
        return f"{head} :- {', '.join(items)}."


@dataclass(frozen=True)
class SetDecl:
    set_name: Term
    members: Tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ValueError("a set declaration needs at least one member")

    def __str__(self):
        return f"{self.set_name} : [{', '.join(map(str, self.members))}]."


@dataclass(frozen=True)
class OrderedProgram:
    rules: Tuple[Rule, ...] = ()
    set_decls: Tuple[SetDecl, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "set_decls", tuple(self.set_decls))

    @property
    def names(self):
        """Rule names in rule order."""
        return [r.name for r in self.rules if r.name is not None]

    @property
    def set_names(self):
        return [d.set_name for d in self.set_decls]

    def is_ground(self):
        return not any(True for _ in program_variables(self))

    def __str__(self):
        return "".join(f"{s}\n" for s in (*self.rules, *self.set_decls))


@dataclass(frozen=True)
class AnswerSet:
    """A consistent set of ground literals."""

    literals: frozenset = frozenset()

    def __post_init__(self):
        lits = frozenset(self.literals)
        object.__setattr__(self, "literals", lits)
        for lit in lits:
            if lit.strong_neg and lit.complement() in lits:
                raise ValueError(f"inconsistent answer set: {lit.atom_str} and its complement")

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    def __contains__(self, item):
        return item in self.literals

    def sorted(self):
        return sorted(self.literals, key=str)

    def __str__(self):
        return "{" + ", ".join(map(str, self.sorted())) + "}"


# -- structural utilities ----------------------------------------------------


def substitute(t: Term, binding: Dict[Variable, Term]) -> Term:
    if isinstance(t, Variable):
        return binding.get(t, t)
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(substitute(a, binding) for a in t.args))
    return t


def substitute_literal(lit, binding):
    return Literal(lit.predicate, tuple(substitute(a, binding) for a in lit.args), lit.strong_neg)


def substitute_item(item, binding):
    if item is None:
        return None
    if isinstance(item, PrefAtom):
        return PrefAtom(substitute(item.lesser, binding), substitute(item.greater, binding))
    if isinstance(item, BodyLiteral):
        return BodyLiteral(substitute_literal(item.lit, binding), item.naf)
    return substitute_literal(item, binding)


def substitute_rule(rule: Rule, binding) -> Rule:
    return Rule(
        substitute_item(rule.head, binding),
        tuple(substitute_item(b, binding) for b in rule.body),
        None if rule.name is None else substitute(rule.name, binding),
    )


def term_subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, Compound):
        for a in t.args:
            yield from term_subterms(a)


def item_terms(item) -> Iterator[Term]:
    """Top-level argument terms of a head or body item."""
    if item is None:
        return
    if isinstance(item, PrefAtom):
        yield item.lesser
        yield item.greater
    elif isinstance(item, BodyLiteral):
        yield from item.lit.args
    else:
        yield from item.args


def rule_terms(rule: Rule) -> Iterator[Term]:
    if rule.name is not None:
        yield rule.name
    yield from item_terms(rule.head)
    for b in rule.body:
        yield from item_terms(b)


def program_terms(p: OrderedProgram) -> Iterator[Term]:
    for r in p.rules:
        yield from rule_terms(r)
    for d in p.set_decls:
        yield d.set_name
        yield from d.members


def term_variables(t: Term) -> Iterator[Variable]:
    return (s for s in term_subterms(t) if isinstance(s, Variable))


def rule_variables(rule: Rule):
    """Variables of a rule, sorted by name."""
    found = {v for t in rule_terms(rule) for v in term_variables(t)}
    return sorted(found)


def program_variables(p: OrderedProgram) -> Iterator[Variable]:
    for t in program_terms(p):
        yield from term_variables(t)


def is_ground_term(t: Term) -> bool:
    return not any(True for _ in term_variables(t))


def collect_constants(p: OrderedProgram) -> set:
    """Every constant occurring in ``p``, inside compound terms too."""
    return {s for t in program_terms(p) for s in term_subterms(t) if isinstance(s, Constant)}


def matches(pattern: Term, t: Term, binding=None) -> bool:
    """One-way matching of ``pattern`` (may contain variables) against ``t``."""
    binding = {} if binding is None else binding
    if isinstance(pattern, Variable):
        if pattern in binding:
            return binding[pattern] == t
        binding[pattern] = t
        return True
    if isinstance(pattern, Compound):
        return (
            isinstance(t, Compound)
            and t.functor == pattern.functor
            and len(t.args) == len(pattern.args)
            and all(matches(a, b, binding) for a, b in zip(pattern.args, t.args))
        )
    return pattern == t


def check_program(p: OrderedProgram) -> None:
    """Raise :class:`ProgramError` unless the naming invariants hold."""
    seen = set()
    for name in p.names:
        if name in seen:
            raise ProgramError(f"duplicate rule name {name}")
        seen.add(name)
    set_seen = set()
    for d in p.set_decls:
        check_set_decl(d, seen, set_seen)
        set_seen.add(d.set_name)


def check_set_decl(d: SetDecl, rule_names: Iterable[Term], earlier_sets: Iterable[Term]) -> None:
    rule_names = list(rule_names)
    if d.set_name in earlier_sets:
        raise ProgramError(f"duplicate set name {d.set_name}")
    if any(matches(n, d.set_name) for n in rule_names):
        raise ProgramError(f"{d.set_name} is used both as a rule name and as a set name")
    for m in d.members:
        if not any(matches(n, m) for n in rule_names):
            raise ProgramError(f"set {d.set_name} member {m} names no rule")
