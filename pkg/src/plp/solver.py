"""A small answer-set solver for ground normal programs with constraints.

Candidates are guesses over atoms occurring under ``not``; each guess is
completed by the least model of the reduct and kept when the model agrees
with the guess and violates no constraint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from .core import AnswerSet, BodyLiteral, Literal, Rule, is_ground_term
from .errors import BudgetExceeded, SolverError

DEFAULT_BUDGET = 2 ** 24


class _Incoherent:
    def __repr__(self):
        return "INCOHERENT"


INCOHERENT = _Incoherent()


@dataclass(frozen=True)
class GroundNormalProgram:
    rules: Tuple[Rule, ...] = ()

    def __post_init__(self):
        rules = tuple(self.rules)
        object.__setattr__(self, "rules", rules)
        for r in rules:
            if r.name is not None:
                raise SolverError(f"named rule in a normal program: {r}")
            lits = [r.head] if r.head is not None else []
            for b in r.body:
                if not isinstance(b, BodyLiteral):
                    raise SolverError(f"preference atom in a normal program: {r}")
                lits.append(b.lit)
            for lit in lits:
                if not isinstance(lit, Literal):
                    raise SolverError(f"preference atom in a normal program: {r}")
                if lit.strong_neg:
                    raise SolverError(f"strong negation must be compiled away: {r}")
                if not all(is_ground_term(a) for a in lit.args):
                    raise SolverError(f"non-ground rule: {r}")

    @classmethod
    def of(cls, p) -> "GroundNormalProgram":
        if isinstance(p, cls):
            return p
        return cls(tuple(getattr(p, "rules", p)))

    @property
    def atoms(self) -> FrozenSet[Literal]:
        out = set()
        for r in self.rules:
            if r.head is not None:
                out.add(r.head)
            out.update(b.lit for b in r.body)
        return frozenset(out)


def reduct(p, x: Iterable[Literal]) -> GroundNormalProgram:
    """Gelfond-Lifschitz reduct of ``p`` relative to ``x``."""
    p = GroundNormalProgram.of(p)
    x = set(x)
    rules = []
    for r in p.rules:
        if any(b.naf and b.lit in x for b in r.body):
            continue
        rules.append(Rule(r.head, tuple(b for b in r.body if not b.naf)))
    return GroundNormalProgram(tuple(rules))


def least_model(p):
    """Least model of a naf-free program, or INCOHERENT if a constraint fires."""
    p = GroundNormalProgram.of(p)
    if any(b.naf for r in p.rules for b in r.body):
        raise SolverError("least_model needs a program without 'not'")
    model = set()
    changed = True
    while changed:
        changed = False
        for r in p.rules:
            if r.head is not None and r.head not in model and all(b.lit in model for b in r.body):
                model.add(r.head)
                changed = True
    for r in p.rules:
        if r.head is None and all(b.lit in model for b in r.body):
            return INCOHERENT
    return frozenset(model)


class _Indexed:
    """Integer-encoded program with a linear-time least-model routine."""

    def __init__(self, p: GroundNormalProgram):
        self.atoms = sorted(p.atoms, key=str)
        index = {a: i for i, a in enumerate(self.atoms)}
        self.rules = []  # (head or -1, pos ids, neg ids)
        for r in p.rules:
            head = -1 if r.head is None else index[r.head]
            pos = tuple(sorted({index[b.lit] for b in r.body if not b.naf}))
            neg = tuple(sorted({index[b.lit] for b in r.body if b.naf}))
            self.rules.append((head, pos, neg))
        self.watch = [[] for _ in self.atoms]
        for k, (_, pos, _) in enumerate(self.rules):
            for a in pos:
                self.watch[a].append(k)
        self.naf_atoms = sorted({a for _, _, neg in self.rules for a in neg})

    def closure(self, active):
        """Least model of the positive parts of the rules flagged in ``active``."""
        missing = [len(pos) for _, pos, _ in self.rules]
        model = [False] * len(self.atoms)
        queue = [k for k, ok in enumerate(active) if ok and not missing[k]]
        while queue:
            k = queue.pop()
            h = self.rules[k][0]
            if h < 0 or model[h]:
                continue
            model[h] = True
            for j in self.watch[h]:
                missing[j] -= 1
                if missing[j] == 0 and active[j]:
                    queue.append(j)
        return model

    def bounds(self):
        """Atoms true in every answer set and atoms true in some candidate."""
        proper = [h >= 0 for h, _, _ in self.rules]
        lower = self.closure([ok and not neg for ok, (_, _, neg) in zip(proper, self.rules)])
        upper = self.closure(proper)
        return lower, upper

    def check(self, true_naf):
        """Answer set for a guess on the naf atoms, or None."""
        active = [h >= 0 and not any(true_naf[a] for a in neg) for h, _, neg in self.rules]
        model = self.closure(active)
        for a in self.naf_atoms:
            if model[a] != true_naf[a]:
                return None
        for h, pos, neg in self.rules:
            if h < 0 and all(model[a] for a in pos) and not any(model[a] for a in neg):
                return None
        return model


def answer_sets(p, budget: int = DEFAULT_BUDGET) -> List[AnswerSet]:
    """All answer sets of ``p``, sorted by their sorted atom lists.

    Only naf atoms whose truth is not already fixed are guessed: an atom
    derivable by rules without ``not`` is in every answer set, and an atom
    underivable even with every ``not`` ignored is in none.
    """
    idx = _Indexed(GroundNormalProgram.of(p))
    lower, upper = idx.bounds()
    fixed = [a for a in idx.naf_atoms if lower[a] or not upper[a]]
    free = [a for a in idx.naf_atoms if upper[a] and not lower[a]]
    if 2 ** len(free) > budget:
        raise BudgetExceeded(len(free), budget)

    true_naf = [False] * len(idx.atoms)
    for a in fixed:
        true_naf[a] = lower[a]
    found = []
    for bits in itertools.product((False, True), repeat=len(free)):
        for a, v in zip(free, bits):
            true_naf[a] = v
        model = idx.check(true_naf)
        if model is not None:
            found.append(AnswerSet(frozenset(a for a, t in zip(idx.atoms, model) if t)))
    return sorted(found, key=lambda s: [str(a) for a in s.sorted()])


def is_answer_set(p, x: Iterable[Literal]) -> bool:
    """Direct stability check: ``x`` equals the least model of its reduct."""
    x = frozenset(x)
    return least_model(reduct(p, x)) == x
