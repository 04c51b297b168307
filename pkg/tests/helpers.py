"""Random program generators and an all-subsets stable-model oracle."""

import random
from importlib import resources

from plp.core import (
    BodyLiteral,
    Compound,
    Constant,
    Literal,
    OrderedProgram,
    PrefAtom,
    Rule,
    SetDecl,
    Variable,
    rule_variables,
)

ATOMS = ["a", "b", "c", "d", "e", "f"]


def corpus(name):
    return resources.files("plp").joinpath("corpus", f"{name}.olp").read_text()


# -- oracle ------------------------------------------------------------------


def brute_force_answer_sets(rules, atoms):
    """Stable models by testing every subset of ``atoms``.

    ``rules`` are ``(head, pos, neg)`` with head an atom or None for a
    constraint.  Works on bitmasks, independently of :mod:`plp.solver`.
    """
    bit = {a: 1 << i for i, a in enumerate(atoms)}

    def mask(xs):
        m = 0
        for x in xs:
            m |= bit[x]
        return m

    enc = [(None if h is None else bit[h], mask(pos), mask(neg)) for h, pos, neg in rules]
    found = []
    for x in range(1 << len(atoms)):
        active = [(h, pos) for h, pos, neg in enc if h is not None and not (neg & x)]
        m = 0
        changed = True
        while changed:
            changed = False
            for h, pos in active:
                if pos & m == pos and not m & h:
                    m |= h
                    changed = True
        if m != x:
            continue
        if any(h is None and pos & x == pos and not neg & x for h, pos, neg in enc):
            continue
        found.append(frozenset(a for a in atoms if bit[a] & x))
    return found


def random_normal_program(rng, max_atoms=15):
    """Random ground normal program as (plp rules, oracle rules, atom names)."""
    n = rng.randint(1, max_atoms)
    atoms = [f"p{i}" for i in range(n)]
    plp_rules, raw = [], []
    for _ in range(rng.randint(1, 2 * n)):
        head = None if rng.random() < 0.15 else rng.choice(atoms)
        k = rng.randint(1 if head is None else 0, 3)
        body = [(rng.choice(atoms), rng.random() < 0.5) for _ in range(k)]
        pos = [a for a, naf in body if not naf]
        neg = [a for a, naf in body if naf]
        raw.append((head, pos, neg))
        plp_rules.append(
            Rule(
                None if head is None else Literal(head),
                tuple(BodyLiteral(Literal(a), naf) for a, naf in body),
            )
        )
    return plp_rules, raw, atoms


# -- ordered programs --------------------------------------------------------


def _lit(rng, atoms, neg_p=0.25):
    return Literal(rng.choice(atoms), (), rng.random() < neg_p)


def _body(rng, atoms, max_len=3):
    return tuple(BodyLiteral(_lit(rng, atoms), rng.random() < 0.4) for _ in range(rng.randint(0, max_len)))


def random_ordered_program(rng, max_rules=6, prefs="none", n_atoms=None):
    """Random ground ordered program with constant names ``n0, n1, ...``.

    ``prefs``: ``"none"`` (no preference atoms), ``"acyclic"`` (preference
    facts and conditional preference rules that all respect one hidden
    linear order), or ``"any"`` (arbitrary pairs, cycles allowed).
    """
    atoms = ATOMS[: n_atoms or rng.randint(2, 5)]
    rules, names = [], []
    for _ in range(rng.randint(1, max_rules)):
        name = None
        if rng.random() < 0.7:
            name = Constant(f"n{len(names)}")
            names.append(name)
        rules.append(Rule(_lit(rng, atoms), _body(rng, atoms), name))
    if not names:
        name = Constant("n0")
        names.append(name)
        rules.append(Rule(_lit(rng, atoms), _body(rng, atoms), name))
    if prefs != "none" and len(names) > 1:
        order = names[:]
        rng.shuffle(order)
        rank = {n: i for i, n in enumerate(order)}
        for _ in range(rng.randint(1, len(names))):
            s, t = rng.sample(names, 2)
            if prefs == "acyclic" and rank[s] > rank[t]:
                s, t = t, s
            body = () if rng.random() < 0.6 else _body(rng, atoms, 2)
            rules.append(Rule(PrefAtom(s, t), body))
    return OrderedProgram(tuple(rules))


def random_conflict_program(rng, max_pairs=3):
    """Named rules defeating each other (``p :- not neg p`` against ``neg p :- not p``)
    under acyclic preferences, so that preferences prune answer sets."""
    atoms = ATOMS[: rng.randint(2, 4)]
    rules, names = [], []
    for i in range(rng.randint(1, max_pairs)):
        a = Literal(rng.choice(atoms))
        for head in (a, a.complement()):
            name = Constant(f"n{len(names)}")
            names.append(name)
            extra = _body(rng, atoms, 1) if rng.random() < 0.4 else ()
            rules.append(Rule(head, (BodyLiteral(head.complement(), True), *extra), name))
    for _ in range(rng.randint(0, 2)):
        rules.append(Rule(_lit(rng, atoms), _body(rng, atoms, 2)))
    order = names[:]
    rng.shuffle(order)
    for _ in range(rng.randint(1, len(names))):
        i, j = sorted(rng.sample(range(len(order)), 2))
        body = () if rng.random() < 0.6 else _body(rng, atoms, 2)
        rules.append(Rule(PrefAtom(order[i], order[j]), body))
    return OrderedProgram(tuple(rules))


def random_size_program(rng, max_named=30):
    """Larger ground program for the size bound; preference pairs are arbitrary."""
    atoms = [f"q{i}" for i in range(10)]
    n_named = rng.randint(1, max_named)
    names = [Constant(f"r{i}") for i in range(n_named)]
    rules = [Rule(_lit(rng, atoms), _body(rng, atoms, 5), n) for n in names]
    rules += [Rule(_lit(rng, atoms), _body(rng, atoms, 5)) for _ in range(rng.randint(0, 10))]
    for _ in range(rng.randint(0, 2 * n_named)):
        s, t = rng.choice(names), rng.choice(names)
        rules.append(Rule(PrefAtom(s, t), _body(rng, atoms, 2)))
    rng.shuffle(rules)
    return OrderedProgram(tuple(rules))


def _rand_term(rng, depth=0, allow_vars=True):
    r = rng.random()
    if allow_vars and r < 0.25:
        return Variable(rng.choice(["X", "Y", "Z1", "_W"]))
    if depth < 2 and r < 0.5:
        return Compound(rng.choice(["f", "g"]), tuple(_rand_term(rng, depth + 1, allow_vars) for _ in range(rng.randint(1, 2))))
    return Constant(rng.choice(["c", "d", "tweety", "0", "42"]))


def random_surface_program(rng):
    """Random well-formed program exercising the whole surface grammar."""
    preds = ["p", "q", "water_shy", "r2d2"]

    def lit():
        args = tuple(_rand_term(rng) for _ in range(rng.randint(0, 2)))
        return Literal(rng.choice(preds), args, rng.random() < 0.3)

    def pref():
        return PrefAtom(_rand_term(rng), _rand_term(rng))

    def body():
        items = []
        for _ in range(rng.randint(0, 3)):
            if rng.random() < 0.2:
                items.append(pref())
            else:
                items.append(BodyLiteral(lit(), rng.random() < 0.4))
        return tuple(items)

    rules, names = [], []
    for i in range(rng.randint(0, 6)):
        roll = rng.random()
        if roll < 0.15:
            rule = Rule(None, body() or (BodyLiteral(lit()),))
        elif roll < 0.3:
            rule = Rule(pref(), body())
        else:
            rule = Rule(lit(), body())
        if rng.random() < 0.5:
            # compound names carry every rule variable so instances stay distinct
            if rng.random() < 0.5 and not rule_variables(rule):
                name = Constant(f"n{i}")
            else:
                name = Compound("r", (Constant(str(i)), *rule_variables(rule)))
            names.append(name)
            rule = Rule(rule.head, rule.body, name)
        rules.append(rule)
    decls = []
    ground_names = [n for n in names if isinstance(n, Constant)]
    for j in range(rng.randint(0, 2) if ground_names else 0):
        members = tuple(rng.choice(ground_names) for _ in range(rng.randint(1, 3)))
        decls.append(SetDecl(Constant(f"m{j}"), members))
    return OrderedProgram(tuple(rules), tuple(decls))


def seeded(seed):
    return random.Random(seed)
