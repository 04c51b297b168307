"""Grounding and name flattening.

Rules with variables are replaced by every instance over the program's
constants (no safety requirement: a variable may occur only in the rule name
or under ``not``).  Compound name terms are then collapsed into constants by
joining functor and arguments with ``_``.
"""

from __future__ import annotations

import itertools

from .core import (
    Compound,
    Constant,
    OrderedProgram,
    PrefAtom,
    Rule,
    SetDecl,
    check_program,
    collect_constants,
    is_ground_term,
    program_variables,
    rule_variables,
    substitute_rule,
)
from .errors import GroundingError, NameCollisionError, ProgramError


def ground_rule(rule: Rule, constants):
    variables = rule_variables(rule)
    if not variables:
        yield rule
        return
    for values in itertools.product(constants, repeat=len(variables)):
        yield substitute_rule(rule, dict(zip(variables, values)))


def ground_program(p: OrderedProgram) -> OrderedProgram:
    """Replace each rule by all of its instances over ``collect_constants(p)``.

    Instances come in input rule order, then lexicographic binding order
    (variables sorted by name, constants by symbol).
    """
    constants = sorted(collect_constants(p))
    if not constants and any(True for _ in program_variables(p)):
        raise GroundingError("program has variables but no constants to instantiate them with")
    rules = [g for r in p.rules for g in ground_rule(r, constants)]
    for d in p.set_decls:
        if not all(is_ground_term(t) for t in (d.set_name, *d.members)):
            raise GroundingError(f"set declaration {d} contains variables")
    out = OrderedProgram(tuple(rules), p.set_decls)
    try:
        check_program(out)
    except ProgramError as e:
        raise GroundingError(f"after grounding: {e}") from None
    return out


def flat_symbol(t) -> str:
    if isinstance(t, Compound):
        return "_".join([t.functor, *(flat_symbol(a) for a in t.args)])
    return str(t)


def flatten_names(p: OrderedProgram) -> OrderedProgram:
    """Turn compound name terms into constants, e.g. ``r(f(c))`` into ``r_f_c``.

    Applies to rule names, both sides of preference atoms and set
    declarations.  Two distinct terms that flatten to the same constant raise
    :class:`NameCollisionError`.
    """
    if not p.is_ground():
        raise GroundingError("flatten_names needs a ground program")

    name_terms = []
    for r in p.rules:
        if r.name is not None:
            name_terms.append(r.name)
        for item in (r.head, *r.body):
            if isinstance(item, PrefAtom):
                name_terms += [item.lesser, item.greater]
    for d in p.set_decls:
        name_terms += [d.set_name, *d.members]

    mapping, owner = {}, {}
    for t in name_terms:
        if t in mapping:
            continue
        flat = Constant(flat_symbol(t))
        if flat in owner and owner[flat] != t:
            raise NameCollisionError(owner[flat], t, flat)
        owner[flat] = t
        mapping[t] = flat

    def fix(item):
        if isinstance(item, PrefAtom):
            return PrefAtom(mapping[item.lesser], mapping[item.greater])
        return item

    rules = tuple(
        Rule(
            fix(r.head),
            tuple(fix(b) for b in r.body),
            None if r.name is None else mapping[r.name],
        )
        for r in p.rules
    )
    decls = tuple(SetDecl(mapping[d.set_name], tuple(mapping[m] for m in d.members)) for d in p.set_decls)
    return OrderedProgram(rules, decls)
