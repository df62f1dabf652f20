"""Partial rewriting operators generated by balanced equations.

An operator is represented by its seed: a pair of terms (source, target)
whose substitution instances form exactly the operator's graph.  Applying a
rule at a subterm address is realized by wrapping the rule's sides in a
most-general context along the address, so translated rules are again seed
operators.  Composition goes through pair unification of the first target
with the second source; a failed unification yields the empty operator,
which absorbs everything.

The module also builds the two equational theories used throughout the
package: for an n-ary tuple symbol, the regrouping theory (n-1 rules moving
a nested tuple one child position to the left) and its symmetric extension
(adjacent leaf transpositions), together with a congruence test.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .terms import (
    CAT,
    App,
    Signature,
    Term,
    TermError,
    Var,
    apply_subst,
    catalan_signature,
    is_balanced,
    is_linear_pair,
    leaf_addresses,
    replace,
    subterm,
    underlying_list,
)
from .unify import match, mgu


@dataclass(frozen=True)
class Rule:
    """A named, balanced equation oriented as source -> target."""

    name: str
    source: Term
    target: Term

    def __post_init__(self):
        if not is_balanced(self.source, self.target):
            raise TermError(f"rule {self.name!r} is not balanced")


@dataclass(frozen=True)
class TranslatedRule:
    """A rule applied at a subterm address, possibly in reverse."""

    rule: Rule
    address: tuple = ()
    forward: bool = True


class _Empty:
    """The absorbing empty operator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _Empty()


@dataclass(frozen=True)
class Seed:
    """A seed operator: maps instances of source to instances of target."""

    source: Term
    target: Term

    def __repr__(self) -> str:
        return f"Seed({self.source!r} -> {self.target!r})"


Operator = Seed | _Empty


def _first_occurrence_vars(t: Term) -> list:
    out: list = []
    seen: set = set()

    def walk(u: Term) -> None:
        if isinstance(u, Var):
            if u.name not in seen:
                seen.add(u.name)
                out.append(u.name)
            return
        for c in u.children:
            walk(c)

    walk(t)
    return out


def canonical(seed: Seed) -> Seed:
    """Rename variables to x1, x2, ... by first occurrence in the source.

    Operator equality is syntactic equality of canonical seeds.
    """
    order = _first_occurrence_vars(seed.source)
    extra = [v for v in _first_occurrence_vars(seed.target) if v not in order]
    if extra:
        raise TermError(f"seed target has variables outside the source: {extra}")
    renaming = {name: Var(f"x{k}") for k, name in enumerate(order, start=1)}
    return Seed(apply_subst(seed.source, renaming), apply_subst(seed.target, renaming))


def identity_operator() -> Seed:
    """The everywhere-defined identity, Seed(x1, x1)."""
    return Seed(Var("x1"), Var("x1"))


def translated_seed(tr: TranslatedRule, signature: Signature) -> Seed:
    """The seed of a rule applied at an address.

    Walking the address, each step places the rule under construction at the
    indicated child and fresh distinct variables at all sibling positions,
    which is the most general context along that path.
    """
    source, target = tr.rule.source, tr.rule.target
    if not tr.forward:
        source, target = target, source
    fresh = 0
    single = signature.single_symbol
    for step in reversed(tr.address):
        if isinstance(step, tuple):
            symbol, index = step
        else:
            if single is None:
                raise TermError(
                    "plain integer address steps need a single-symbol signature"
                )
            symbol, index = single, step
        arity = signature.arity(symbol)
        if not 1 <= index <= arity:
            raise TermError(f"address step {step} out of range for {symbol!r}")
        kids_s, kids_t = [], []
        for k in range(1, arity + 1):
            if k == index:
                kids_s.append(source)
                kids_t.append(target)
            else:
                fresh += 1
                kids_s.append(Var(f"c{fresh}"))
                kids_t.append(Var(f"c{fresh}"))
        source = App(symbol, tuple(kids_s))
        target = App(symbol, tuple(kids_t))
    return canonical(Seed(source, target))


def apply_operator(op: Operator, u: Term) -> Term | None:
    """Apply an operator to a term; None when u is outside its domain."""
    if op is EMPTY:
        return None
    phi = match(op.source, u)
    if phi is None:
        return None
    return apply_subst(op.target, phi)


def compose(op1: Operator, op2: Operator) -> Operator:
    """The operator "op1 followed by op2".

    The graph of the result is exactly the relational composite of the two
    graphs: pairs (s1^phi, t2^psi) over all instances of the unified middle
    term.  Returns EMPTY when the middle terms do not unify.
    """
    if op1 is EMPTY or op2 is EMPTY:
        return EMPTY
    pair = mgu(op1.target, op2.source)
    if pair is None:
        return EMPTY
    return canonical(
        Seed(apply_subst(op1.source, pair.left), apply_subst(op2.target, pair.right))
    )


def invert(op: Operator) -> Operator:
    """Swap source and target; EMPTY is its own inverse."""
    if op is EMPTY:
        return EMPTY
    return canonical(Seed(op.target, op.source))


def eval_word(trs, signature: Signature) -> Operator:
    """Left-to-right composite of translated rules; [] gives the identity."""
    op: Operator = identity_operator()
    for tr in trs:
        op = compose(op, translated_seed(tr, signature))
    return op


# ---------------------------------------------------------------------------
# Theories


@dataclass(frozen=True)
class Theory:
    """A named set of balanced rules over one signature.

    kind is "catalan", "symmetric-catalan", or "generic"; the first two get
    exact congruence oracles.
    """

    name: str
    kind: str
    signature: Signature
    rules: tuple
    n: int | None = None
    _by_name: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {r.name: r for r in self.rules})

    def rule(self, name: str) -> Rule:
        if name not in self._by_name:
            raise TermError(f"theory {self.name!r} has no rule {name!r}")
        return self._by_name[name]

    def equations(self):
        return [(r.source, r.target) for r in self.rules]


def _xvars(k: int) -> list:
    return [Var(f"x{j}") for j in range(1, k + 1)]


def regroup_rule(n: int, i: int) -> Rule:
    """Rule a<i>: the nested tuple at child i+1 regroups into child i.

    Source: x1..xi, (x_{i+1}..x_{i+n}), x_{i+n+1}..x_{2n-1}
    Target: x1..x_{i-1}, (x_i..x_{i+n-1}), x_{i+n}..x_{2n-1}
    """
    if not 1 <= i <= n - 1:
        raise TermError(f"regroup index {i} out of range for arity {n}")
    x = _xvars(2 * n - 1)
    source = App(CAT, tuple(x[:i]) + (App(CAT, tuple(x[i : i + n])),) + tuple(x[i + n :]))
    target = App(
        CAT, tuple(x[: i - 1]) + (App(CAT, tuple(x[i - 1 : i + n - 1])),) + tuple(x[i + n - 1 :])
    )
    return Rule(f"a{i}", source, target)


def swap_rule(n: int, i: int) -> Rule:
    """Rule s<i>: transpose the leaves at child positions i, i+1."""
    if not 1 <= i <= n - 1:
        raise TermError(f"swap index {i} out of range for arity {n}")
    x = _xvars(n)
    swapped = list(x)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return Rule(f"s{i}", App(CAT, tuple(x)), App(CAT, tuple(swapped)))


def catalan_theory(n: int) -> Theory:
    sig = catalan_signature(n)
    rules = tuple(regroup_rule(n, i) for i in range(1, n))
    return Theory("c", "catalan", sig, rules, n)


def symmetric_catalan_theory(n: int) -> Theory:
    sig = catalan_signature(n)
    rules = tuple(regroup_rule(n, i) for i in range(1, n)) + tuple(
        swap_rule(n, i) for i in range(1, n)
    )
    return Theory("sc", "symmetric-catalan", sig, rules, n)


def generic_theory(name: str, signature: Signature, rules) -> Theory:
    return Theory(name, "generic", signature, tuple(rules))


# ---------------------------------------------------------------------------
# Rewriting and congruence


def rewrite_at(t: Term, rule: Rule, address: tuple, forward: bool = True) -> Term | None:
    """Single rewrite step at an address, or None if it does not apply."""
    pattern, out = (rule.source, rule.target) if forward else (rule.target, rule.source)
    node = subterm(t, address)
    if node is None:
        return None
    phi = match(pattern, node)
    if phi is None:
        return None
    return replace(t, address, apply_subst(out, phi))


def _all_addresses(t: Term) -> list:
    out = [()]

    def walk(u: Term, prefix: tuple) -> None:
        if isinstance(u, Var):
            return
        for k, c in enumerate(u.children, start=1):
            out.append(prefix + (k,))
            walk(c, prefix + (k,))

    walk(t, ())
    return out


def one_step_rewrites(t: Term, theory: Theory):
    """All terms reachable by one translated rule application (either
    direction, any address)."""
    for address in _all_addresses(t):
        for rule in theory.rules:
            for forward in (True, False):
                result = rewrite_at(t, rule, address, forward)
                if result is not None:
                    yield result


def congruent(theory: Theory, t: Term, u: Term, budget: int = 20000):
    """Decide whether t and u are equal modulo the theory.

    For the tuple theories the exact oracles apply: equality of leaf words
    for the regrouping theory, equality of leaf multisets for the symmetric
    one.  Generic theories get a bounded bidirectional search; the return
    value is then True, False (frontier exhausted), or None when the node
    budget ran out before an answer.
    """
    if theory.kind == "catalan":
        return underlying_list(t) == underlying_list(u)
    if theory.kind == "symmetric-catalan":
        return Counter(underlying_list(t)) == Counter(underlying_list(u))

    if t == u:
        return True
    left = {t}
    right = {u}
    # ordered frontiers keep the search deterministic run to run
    frontier_left, frontier_right = [t], [u]
    visited = 2
    while frontier_left or frontier_right:
        expand_left = bool(frontier_left) and (
            not frontier_right or len(frontier_left) <= len(frontier_right)
        )
        frontier = frontier_left if expand_left else frontier_right
        own, other = (left, right) if expand_left else (right, left)
        new: list = []
        for term in frontier:
            for nxt in one_step_rewrites(term, theory):
                if nxt in other:
                    return True
                if nxt not in own:
                    own.add(nxt)
                    new.append(nxt)
                    visited += 1
                    if visited > budget:
                        return None
        if expand_left:
            frontier_left = new
        else:
            frontier_right = new
    return False


# ---------------------------------------------------------------------------
# Group-level seed normal form


def seed_reduce(op: Operator) -> Operator:
    """Cancel matched tuple blocks from a linear seed.

    Whenever n consecutive source leaves are the children of one node and
    their images under the leaf correspondence are n consecutive target
    leaves, in order, forming the children of one target node, both nodes
    collapse to a single shared variable.  The fixpoint is the seed of the
    group element: idempotents collapse to the identity seed.  This is a
    term-level computation, independent of the tree-diagram machinery.
    """
    if op is EMPTY:
        return EMPTY
    if not is_linear_pair(op.source, op.target):
        raise TermError("seed_reduce needs a linear seed")
    source, target = op.source, op.target
    while True:
        if isinstance(source, Var):
            break
        src_leaves = leaf_addresses(source)
        src_word = underlying_list(source)
        tgt_leaves = leaf_addresses(target)
        tgt_word = underlying_list(target)
        tgt_pos = {name: k for k, name in enumerate(tgt_word)}
        done = True
        for addr in _all_addresses(source):
            node = subterm(source, addr)
            if isinstance(node, Var) or not all(
                isinstance(c, Var) for c in node.children
            ):
                continue
            n = len(node.children)
            j = src_leaves.index(addr + (1,))
            positions = [tgt_pos[src_word[j + k]] for k in range(n)]
            if positions != list(range(positions[0], positions[0] + n)):
                continue
            first = tgt_leaves[positions[0]]
            if not first or first[-1] != 1:
                continue
            parent = first[:-1]
            tnode = subterm(target, parent)
            if len(tnode.children) != n or not all(
                isinstance(c, Var) for c in tnode.children
            ):
                continue
            merged = Var(src_word[j])
            source = replace(source, addr, merged)
            target = replace(target, parent, merged)
            done = False
            break
        if done:
            break
    return canonical(Seed(source, target))
