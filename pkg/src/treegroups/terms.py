"""Terms over graded signatures, term addresses, substitution, and the
combinatorics of n-ary bracketings.

A term is either a variable leaf or an application of a function symbol to
exactly arity-many subterms.  The default setting throughout the package is
the "tuple" signature: a single n-ary symbol, whose terms are exactly the
leaf-labelled n-ary trees.  This module also provides the normal form and
counting machinery for those trees: the in-order leaf word, the left-comb
normal form, the rank measure that is zero exactly on left combs, and
exhaustive shape enumeration checked against the generalized Catalan numbers.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


class TermError(ValueError):
    pass


class ParseError(TermError):
    pass


class AddressError(TermError):
    pass


@dataclass(frozen=True)
class Var:
    """A variable leaf."""

    name: str

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True)
class App:
    """An application node: a function symbol over child terms."""

    symbol: str
    children: tuple

    def __repr__(self) -> str:
        kids = ", ".join(repr(c) for c in self.children)
        return f"App({self.symbol!r}, ({kids}))"


# A Term is Var | App.  Addresses are tuples whose steps are 1-based child
# indices; a step may also be a (symbol, index) pair, in which case the
# symbol at that node is checked while walking.  The empty tuple is the root.
Term = Var | App
Address = tuple

#: Symbol name used for the single n-ary tuple symbol.
CAT = "*"

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Signature:
    """A graded set of function symbols; every arity is at least 1."""

    def __init__(self, symbols):
        arities: dict[str, int] = {}
        for name, arity in symbols:
            if not _IDENT.match(name) and name != CAT:
                raise TermError(f"bad symbol name: {name!r}")
            if name in arities:
                raise TermError(f"duplicate symbol: {name!r}")
            if not isinstance(arity, int) or arity < 1:
                raise TermError(f"arity of {name!r} must be a positive integer")
            arities[name] = arity
        if not arities:
            raise TermError("signature needs at least one symbol")
        self.arities = arities

    def arity(self, name: str) -> int:
        if name not in self.arities:
            raise TermError(f"unknown symbol: {name!r}")
        return self.arities[name]

    @property
    def single_symbol(self) -> str | None:
        """The unique symbol name, or None for multi-symbol signatures."""
        if len(self.arities) == 1:
            return next(iter(self.arities))
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, Signature) and self.arities == other.arities

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.arities.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}/{v}" for k, v in self.arities.items())
        return f"Signature({inner})"


def catalan_signature(n: int) -> Signature:
    if n < 2:
        raise TermError("tuple symbol arity must be at least 2")
    return Signature([(CAT, n)])


def cat(*children: Term) -> App:
    """Build a tuple-symbol application (arity = number of children given)."""
    return App(CAT, tuple(children))


def check_term(t: Term, signature: Signature) -> None:
    """Raise unless every node's child count equals its symbol's arity."""
    if isinstance(t, Var):
        return
    if len(t.children) != signature.arity(t.symbol):
        raise TermError(
            f"symbol {t.symbol!r} applied to {len(t.children)} arguments, "
            f"expected {signature.arity(t.symbol)}"
        )
    for c in t.children:
        check_term(c, signature)


# ---------------------------------------------------------------------------
# Addresses and subterm access


def _step_index(t: Term, step) -> int | None:
    """Child index for one address step at node t, or None if inconsistent."""
    if isinstance(t, Var):
        return None
    if isinstance(step, tuple):
        symbol, index = step
        if symbol != t.symbol:
            return None
    else:
        index = step
    if not 1 <= index <= len(t.children):
        return None
    return index


def address_indices(address: Address) -> tuple:
    """Strip symbol components, leaving the plain 1-based index path."""
    return tuple(step[1] if isinstance(step, tuple) else step for step in address)


def subterm(t: Term, address: Address) -> Term | None:
    """The subterm of t at the given address, or None if the path is absent."""
    for step in address:
        index = _step_index(t, step)
        if index is None:
            return None
        t = t.children[index - 1]
    return t


def replace(t: Term, address: Address, s: Term) -> Term:
    """Replace the subterm at `address` with s; other positions untouched."""
    if not address:
        return s
    index = _step_index(t, address[0])
    if index is None:
        raise AddressError(f"address not present: {address}")
    kids = list(t.children)
    kids[index - 1] = replace(kids[index - 1], address[1:], s)
    return App(t.symbol, tuple(kids))


def is_prefix(a: Address, b: Address) -> bool:
    a, b = address_indices(a), address_indices(b)
    return len(a) <= len(b) and b[: len(a)] == a


def orthogonal(a: Address, b: Address) -> bool:
    """True iff neither address is a prefix of the other."""
    return not is_prefix(a, b) and not is_prefix(b, a)


def leaf_addresses(t: Term) -> list:
    """Addresses of all variable leaves, left to right."""
    out = []

    def walk(u: Term, prefix: tuple) -> None:
        if isinstance(u, Var):
            out.append(prefix)
            return
        for k, c in enumerate(u.children, start=1):
            walk(c, prefix + (k,))

    walk(t, ())
    return out


def variable_addresses(t: Term, name: str) -> list:
    """Addresses of every occurrence of the named variable, left to right."""
    return [a for a in leaf_addresses(t) if subterm(t, a) == Var(name)]


# ---------------------------------------------------------------------------
# Variables and substitution


def support(t: Term) -> frozenset:
    """The set of variable names occurring in t."""
    if isinstance(t, Var):
        return frozenset((t.name,))
    out: frozenset = frozenset()
    for c in t.children:
        out |= support(c)
    return out


def occurrences(t: Term) -> Counter:
    """Multiplicity of each variable in t."""
    if isinstance(t, Var):
        return Counter((t.name,))
    out: Counter = Counter()
    for c in t.children:
        out += occurrences(c)
    return out


def is_balanced(s: Term, t: Term) -> bool:
    return support(s) == support(t)


def is_linear_pair(s: Term, t: Term) -> bool:
    """Balanced, and each variable occurs exactly once on each side."""
    occ_s, occ_t = occurrences(s), occurrences(t)
    return (
        set(occ_s) == set(occ_t)
        and all(v == 1 for v in occ_s.values())
        and all(v == 1 for v in occ_t.values())
    )


def apply_subst(t: Term, subst: dict) -> Term:
    """Simultaneous substitution, extended homomorphically over App nodes.

    Unbound variables map to themselves.
    """
    if isinstance(t, Var):
        return subst.get(t.name, t)
    return App(t.symbol, tuple(apply_subst(c, subst) for c in t.children))


def compose_subst(first: dict, second: dict) -> dict:
    """The substitution "apply `first`, then `second`"."""
    out = {name: apply_subst(term, second) for name, term in first.items()}
    for name, term in second.items():
        out.setdefault(name, term)
    return {name: term for name, term in out.items() if term != Var(name)}


# ---------------------------------------------------------------------------
# Leaf words, left combs, rank


def underlying_list(t: Term) -> list:
    """The in-order word of leaf variable names of t."""
    if isinstance(t, Var):
        return [t.name]
    out: list = []
    for c in t.children:
        out.extend(underlying_list(c))
    return out


def lmb(labels, n: int) -> Term:
    """The left comb over the given leaf word.

    The word length must be 1 or of the form n + k(n-1); a single label
    yields a bare variable.
    """
    labels = list(labels)
    m = len(labels)
    if n < 2:
        raise TermError("tuple symbol arity must be at least 2")
    if m == 0:
        raise TermError("empty leaf word")
    if m == 1:
        return Var(labels[0])
    if (m - 1) % (n - 1) != 0:
        raise TermError(f"leaf word of length {m} is not n + k(n-1) for n={n}")
    node: Term = App(CAT, tuple(Var(x) for x in labels[:n]))
    rest = labels[n:]
    while rest:
        node = App(CAT, (node,) + tuple(Var(x) for x in rest[: n - 1]))
        rest = rest[n - 1 :]
    return node


def term_length(t: Term) -> int:
    """Number of leaves of t."""
    if isinstance(t, Var):
        return 1
    return sum(term_length(c) for c in t.children)


def rank(t: Term) -> int:
    """Termination measure for left-comb normalization.

    rank(t) == 0 exactly when t is the left comb on its leaf word.  At each
    node with children t_1..t_n the contribution is
    sum_{i=2}^{n} (i-1) * length(t_i) - n(n-1)/2.
    """
    if isinstance(t, Var):
        return 0
    n = len(t.children)
    total = sum(rank(c) for c in t.children)
    total += sum((i - 1) * term_length(c) for i, c in enumerate(t.children, start=1))
    return total - n * (n - 1) // 2


def assoc_redexes(t: Term) -> list:
    """All (rule index, address) pairs where a forward regrouping applies.

    The rule with index i moves an application node from child position i+1
    into child position i; every such step strictly decreases rank.
    """
    out = []

    def walk(u: Term, prefix: tuple) -> None:
        if isinstance(u, Var):
            return
        n = len(u.children)
        for i in range(1, n):
            if isinstance(u.children[i], App):
                out.append((i, prefix))
        for k, c in enumerate(u.children, start=1):
            walk(c, prefix + (k,))

    walk(t, ())
    return sorted(out, key=lambda p: (p[1], p[0]))


def apply_assoc(t: Term, i: int, address: Address) -> Term:
    """Apply the forward regrouping rule with index i at `address`."""
    node = subterm(t, address)
    if not isinstance(node, App):
        raise AddressError(f"no application node at {address}")
    n = len(node.children)
    if not 1 <= i <= n - 1:
        raise TermError(f"rule index {i} out of range for arity {n}")
    nest = node.children[i]
    if not isinstance(nest, App) or len(nest.children) != n:
        raise TermError(f"rule {i} does not apply at {address}")
    c, d = node.children, nest.children
    grouped = App(node.symbol, (c[i - 1],) + d[:-1])
    new = App(node.symbol, c[: i - 1] + (grouped, d[-1]) + c[i + 1 :])
    return replace(t, address, new)


def step_rank_drop(t: Term, i: int, address: Address) -> int:
    """Exact rank decrease of applying rule i at `address` in t.

    The regrouping releases the nest's last child to the top level; working
    the node formula through the rearrangement, everything cancels except
    (n-1) times that child's length.  Always positive, so every forward
    step makes progress.
    """
    node = subterm(t, address)
    nest = node.children[i]
    return (len(nest.children) - 1) * term_length(nest.children[-1])


def normalize_to_lmb(t: Term, n: int):
    """Rewrite t to the left comb on its leaf word.

    Returns (normal form, steps), where steps is the list of (rule index,
    address) pairs applied in order.  The step choice follows the greatest
    non-variable child position, then recurses into the first child.
    """

    steps: list = []

    def norm(u: Term, base: tuple) -> Term:
        if isinstance(u, Var):
            return u
        while True:
            kids = u.children
            pos = [k for k in range(2, n + 1) if isinstance(kids[k - 1], App)]
            if not pos:
                break
            i = max(pos) - 1
            steps.append((i, base))
            u = apply_assoc(u, i, ())
        first = norm(u.children[0], base + (1,))
        return App(u.symbol, (first,) + u.children[1:])

    result = norm(t, ())
    return result, steps


# ---------------------------------------------------------------------------
# Shape enumeration


def generalized_catalan(n: int, k: int) -> int:
    """Number of n-ary trees with k internal nodes: C(nk, k) / ((n-1)k + 1)."""
    return math.comb(n * k, k) // ((n - 1) * k + 1)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


@lru_cache(maxsize=None)
def _shapes(n: int, k: int) -> tuple:
    """All n-ary tree shapes with k internal nodes; a shape is None for a
    leaf or a tuple of child shapes.  Deterministic order."""
    if k == 0:
        return (None,)
    out = []
    for comp in _compositions(k - 1, n):
        for kids in itertools.product(*(_shapes(n, c) for c in comp)):
            out.append(kids)
    return tuple(out)


def _label_shape(shape, labels_iter) -> Term:
    if shape is None:
        return Var(next(labels_iter))
    return App(CAT, tuple(_label_shape(c, labels_iter) for c in shape))


def enumerate_terms(n: int, k: int, labels=None) -> list:
    """All terms over the n-ary tuple symbol with k internal nodes.

    Leaves are labelled left to right, with x1, x2, ... by default.
    """
    if n < 2:
        raise TermError("tuple symbol arity must be at least 2")
    if k < 0:
        raise TermError("k must be nonnegative")
    m = k * (n - 1) + 1
    if labels is None:
        labels = [f"x{j}" for j in range(1, m + 1)]
    labels = list(labels)
    if len(labels) != m:
        raise TermError(f"need exactly {m} leaf labels, got {len(labels)}")
    return [_label_shape(shape, iter(labels)) for shape in _shapes(n, k)]


# ---------------------------------------------------------------------------
# Text form


def format_term(t: Term, signature: Signature) -> str:
    if signature.single_symbol is not None:
        if isinstance(t, Var):
            return t.name
        inner = " ".join(format_term(c, signature) for c in t.children)
        return f"({inner})"
    if isinstance(t, Var):
        return t.name
    inner = ",".join(format_term(c, signature) for c in t.children)
    return f"{t.symbol}({inner})"


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            tokens.append(ch)
            i += 1
            continue
        m = re.match(r"[A-Za-z][A-Za-z0-9_]*", text[i:])
        if not m:
            raise ParseError(f"bad character {ch!r} in term text")
        tokens.append(m.group())
        i += len(m.group())
    return tokens


def parse_term(text: str, signature: Signature) -> Term:
    """Parse the textual term form.

    Single-symbol signatures use parenthesized tuples: `(a (b c))`.  General
    signatures use `name(t1,...,tk)`; bare identifiers are variables.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of term text")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}")
        pos += 1
        return tok

    single = signature.single_symbol

    def parse() -> Term:
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of term text")
        if single is not None:
            if tok == "(":
                take("(")
                kids = []
                while peek() != ")":
                    if peek() is None:
                        raise ParseError("unbalanced parenthesis")
                    if peek() == ",":
                        raise ParseError("commas are not used with a tuple signature")
                    kids.append(parse())
                take(")")
                n = signature.arity(single)
                if len(kids) != n:
                    raise ParseError(
                        f"tuple of {len(kids)} children, expected {n}"
                    )
                return App(single, tuple(kids))
            take()
            if not _IDENT.match(tok):
                raise ParseError(f"bad token {tok!r}")
            return Var(tok)
        take()
        if not _IDENT.match(tok):
            raise ParseError(f"bad token {tok!r}")
        if peek() == "(":
            if tok not in signature.arities:
                raise ParseError(f"unknown symbol {tok!r}")
            take("(")
            kids = [parse()]
            while peek() == ",":
                take(",")
                kids.append(parse())
            take(")")
            if len(kids) != signature.arity(tok):
                raise ParseError(
                    f"symbol {tok!r} applied to {len(kids)} arguments, "
                    f"expected {signature.arity(tok)}"
                )
            return App(tok, tuple(kids))
        if tok in signature.arities:
            raise ParseError(f"symbol {tok!r} used without arguments")
        return Var(tok)

    out = parse()
    if pos != len(tokens):
        raise ParseError(f"trailing input after term: {tokens[pos:]}")
    return out


def format_address(address: Address) -> str:
    indices = address_indices(address)
    if not indices:
        return "-"
    return ".".join(str(i) for i in indices)


def parse_address(text: str) -> tuple:
    text = text.strip()
    if text == "-" or text == "":
        return ()
    try:
        indices = tuple(int(p) for p in text.split("."))
    except ValueError as exc:
        raise ParseError(f"bad address text {text!r}") from exc
    if any(i < 1 for i in indices):
        raise ParseError(f"address indices must be positive: {text!r}")
    return indices
