"""Compiler from ordered logic programs to regular extended logic programs."""

from .compiler import CompiledProgram, compile, compile_sets, erase_order
from .core import (
    AnswerSet,
    BodyLiteral,
    Compound,
    Constant,
    Literal,
    OrderedProgram,
    PrefAtom,
    Rule,
    SetDecl,
    Variable,
    collect_constants,
    substitute,
)
from .emitter import emit, filter_nice, parse_answer_sets, render_answer_sets
from .errors import PlpError
from .grounder import flatten_names, ground_program
from .parser import parse_program, parse_term
from .solver import answer_sets, least_model, reduct

__all__ = [
    "AnswerSet", "BodyLiteral", "CompiledProgram", "Compound", "Constant", "Literal",
    "OrderedProgram", "PlpError", "PrefAtom", "Rule", "SetDecl", "Variable",
    "answer_sets", "collect_constants", "compile", "compile_sets", "emit", "erase_order",
    "filter_nice", "flatten_names", "ground_program", "least_model", "parse_answer_sets",
    "parse_program", "parse_term", "reduct", "render_answer_sets", "solve_regular",
    "substitute", "translate",
]


def translate(src: str, coherence: bool = True, emit_neg_prec: bool = False) -> CompiledProgram:
    """Parse, ground, flatten and compile program text."""
    p = flatten_names(ground_program(parse_program(src)))
    return compile(p, coherence=coherence, emit_neg_prec=emit_neg_prec)


def solve_regular(p: OrderedProgram, budget: int = 2 ** 24):
    """Answer sets of a preference-free program, strong negation shown as ``neg``."""
    return [filter_nice(x) for x in answer_sets(compile(erase_order(p)), budget=budget)]
