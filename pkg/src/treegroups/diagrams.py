"""n-ary trees, tree-pair diagrams, and their groups.

A tree is a nested tuple: the empty tuple is a leaf, an internal node is a
tuple of exactly n subtrees (the arity travels alongside, not in the value).
A diagram is a triple (domain tree, range tree, perm) with equal leaf
counts, perm sending the i-th domain leaf (in left-to-right order) to the
perm[i]-th range leaf.  Diagrams modulo common expansion form a group; the
canonical representative is the reduced diagram, obtained by collapsing
matched caret pairs until none remain.

`to_diagram` maps a linear seed operator to a reduced diagram: the two term
shapes plus the leaf permutation induced by the variable correspondence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .terms import Term, TermError, Var, occurrences, underlying_list
from .operators import EMPTY, Operator

LEAF = ()


def is_leaf(tree) -> bool:
    return tree == ()


def caret(n: int):
    return (LEAF,) * n


@lru_cache(maxsize=None)
def leaves(tree) -> tuple:
    """Leaf addresses in lexicographic (left-to-right) order."""
    if is_leaf(tree):
        return ((),)
    out = []
    for k, child in enumerate(tree, start=1):
        out.extend((k,) + addr for addr in leaves(child))
    return tuple(out)


def leaf_count(tree) -> int:
    return len(leaves(tree))


@lru_cache(maxsize=None)
def internal_addresses(tree) -> frozenset:
    if is_leaf(tree):
        return frozenset()
    out = {()}
    for k, child in enumerate(tree, start=1):
        out.update((k,) + addr for addr in internal_addresses(child))
    return frozenset(out)


def tree_from_internal(addresses, n: int):
    """The tree whose internal nodes are exactly the given prefix-closed set."""
    addresses = frozenset(addresses)

    def build(prefix):
        if prefix not in addresses:
            return LEAF
        return tuple(build(prefix + (k,)) for k in range(1, n + 1))

    return build(())


def replace_node(tree, address, new):
    if not address:
        return new
    k = address[0]
    kids = list(tree)
    kids[k - 1] = replace_node(kids[k - 1], address[1:], new)
    return tuple(kids)


def expand(tree, leaf_index: int, n: int):
    """Replace the leaf with the given 1-based index by an n-caret."""
    addrs = leaves(tree)
    if not 1 <= leaf_index <= len(addrs):
        raise TermError(f"leaf index {leaf_index} out of range")
    return replace_node(tree, addrs[leaf_index - 1], caret(n))


def is_expansion_of(big, small) -> bool:
    return internal_addresses(small) <= internal_addresses(big)


def minimal_common_expansion(t1, t2, n: int):
    """The join: internal-address sets united.  It expands both arguments,
    and every common expansion expands it."""
    return tree_from_internal(internal_addresses(t1) | internal_addresses(t2), n)


def _check_tree(tree, n: int) -> None:
    if is_leaf(tree):
        return
    if len(tree) != n:
        raise TermError(f"node with {len(tree)} children in an arity-{n} tree")
    for child in tree:
        _check_tree(child, n)


@dataclass(frozen=True)
class TreeDiagram:
    """A tree pair with a leaf bijection; perm is a 1-based index tuple."""

    n: int
    domain: tuple
    range: tuple
    perm: tuple

    def __post_init__(self):
        _check_tree(self.domain, self.n)
        _check_tree(self.range, self.n)
        m = leaf_count(self.domain)
        if leaf_count(self.range) != m:
            raise TermError("domain and range leaf counts differ")
        if sorted(self.perm) != list(range(1, m + 1)):
            raise TermError("perm is not a bijection on the leaf indices")


def identity_diagram(n: int) -> TreeDiagram:
    return TreeDiagram(n, LEAF, LEAF, (1,))


def expand_diagram(d: TreeDiagram, leaf_index: int) -> TreeDiagram:
    """Simple expansion: caret the domain leaf and its partner, splicing the
    n new leaf pairs in child order."""
    n = d.n
    m = leaf_count(d.domain)
    if not 1 <= leaf_index <= m:
        raise TermError(f"leaf index {leaf_index} out of range")
    partner = d.perm[leaf_index - 1]
    domain = expand(d.domain, leaf_index, n)
    range_ = expand(d.range, partner, n)

    def shift(y: int) -> int:
        return y if y < partner else y + n - 1

    perm = []
    for i in range(1, m + n):
        if i < leaf_index:
            perm.append(shift(d.perm[i - 1]))
        elif i <= leaf_index + n - 1:
            perm.append(partner + (i - leaf_index))
        else:
            perm.append(shift(d.perm[i - n]))
    return TreeDiagram(n, domain, range_, tuple(perm))


def _carets(tree) -> list:
    """(address, first leaf index 1-based) for internal nodes whose children
    are all leaves, ordered by leaf index."""
    out = []

    def walk(node, prefix, first):
        if is_leaf(node):
            return 1
        count = 0
        for k, child in enumerate(node, start=1):
            count += walk(child, prefix + (k,), first + count)
        if all(is_leaf(c) for c in node):
            out.append((prefix, first))
        return count

    walk(tree, (), 1)
    return sorted(out, key=lambda p: p[1])


def reducible_pairs(d: TreeDiagram) -> list:
    """Collapsible caret pairs as (domain address, domain first-leaf index,
    range parent address), ordered by domain leaf index."""
    n = d.n
    range_leaves = leaves(d.range)
    out = []
    for addr, j in _carets(d.domain):
        k = d.perm[j - 1]
        if any(d.perm[j - 1 + i] != k + i for i in range(n)):
            continue
        first = range_leaves[k - 1]
        if not first or first[-1] != 1:
            continue
        parent = first[:-1]
        if all(
            k - 1 + i < len(range_leaves) and range_leaves[k - 1 + i] == parent + (i + 1,)
            for i in range(n)
        ):
            out.append((addr, j, parent))
    return out


def is_reduced(d: TreeDiagram) -> bool:
    return not reducible_pairs(d)


def _collapse(d: TreeDiagram, dom_addr, j: int, range_parent) -> TreeDiagram:
    n = d.n
    m = leaf_count(d.domain)
    k = d.perm[j - 1]
    domain = replace_node(d.domain, dom_addr, LEAF)
    range_ = replace_node(d.range, range_parent, LEAF)

    def shrink(y: int) -> int:
        return y if y < k else y - (n - 1)

    perm = []
    for i in range(1, m - n + 2):
        if i < j:
            perm.append(shrink(d.perm[i - 1]))
        elif i == j:
            perm.append(k)
        else:
            perm.append(shrink(d.perm[i + n - 2]))
    return TreeDiagram(n, domain, range_, tuple(perm))


def reduce(d: TreeDiagram, order=None) -> TreeDiagram:
    """Collapse matched caret pairs to the fixpoint.

    The scan collapses the pair with the lowest domain leaf index first (an
    `order` callable may pick differently from the reducible list); the
    endpoint does not depend on the choice, which the test suite checks by
    exhausting all orders on small diagrams.
    """
    while True:
        pairs = reducible_pairs(d)
        if not pairs:
            return d
        choice = pairs[0] if order is None else order(pairs)
        d = _collapse(d, *choice)


def invert_diagram(d: TreeDiagram) -> TreeDiagram:
    inverse = [0] * len(d.perm)
    for i, y in enumerate(d.perm, start=1):
        inverse[y - 1] = i
    return reduce(TreeDiagram(d.n, d.range, d.domain, tuple(inverse)))


def multiply(d1: TreeDiagram, d2: TreeDiagram) -> TreeDiagram:
    """The diagram "d1 followed by d2", reduced.

    Both factors expand until d1's range equals d2's domain equals the
    minimal common expansion; the permutations then compose.
    """
    if d1.n != d2.n:
        raise TermError("cannot multiply diagrams of different arity")
    middle = minimal_common_expansion(d1.range, d2.domain, d1.n)
    interior = internal_addresses(middle)
    while d1.range != middle:
        target = next(
            i for i, addr in enumerate(leaves(d1.range), start=1) if addr in interior
        )
        source = d1.perm.index(target) + 1
        d1 = expand_diagram(d1, source)
    while d2.domain != middle:
        index = next(
            i for i, addr in enumerate(leaves(d2.domain), start=1) if addr in interior
        )
        d2 = expand_diagram(d2, index)
    perm = tuple(d2.perm[d1.perm[i] - 1] for i in range(len(d1.perm)))
    return reduce(TreeDiagram(d1.n, d1.domain, d2.range, perm))


def diagram_power(d: TreeDiagram, exponent: int) -> TreeDiagram:
    if exponent < 0:
        return diagram_power(invert_diagram(d), -exponent)
    out = identity_diagram(d.n)
    for _ in range(exponent):
        out = multiply(out, d)
    return out


def is_order_preserving(d: TreeDiagram) -> bool:
    """True iff the leaf bijection preserves left-to-right order."""
    return d.perm == tuple(range(1, len(d.perm) + 1))


# ---------------------------------------------------------------------------
# From operators to diagrams


def tree_of_term(t: Term):
    """Forget leaf labels, keep the shape."""
    if isinstance(t, Var):
        return LEAF
    return tuple(tree_of_term(c) for c in t.children)


def to_diagram(op: Operator, n: int) -> TreeDiagram:
    """The reduced diagram of a linear seed operator.

    Leaf i of the source shape maps to the position of the same variable in
    the target's leaf word.  Rejects the empty operator and nonlinear seeds.
    """
    if op is EMPTY:
        raise TermError("the empty operator has no diagram")
    src_occ, tgt_occ = occurrences(op.source), occurrences(op.target)
    if set(src_occ) != set(tgt_occ) or any(
        v != 1 for v in (*src_occ.values(), *tgt_occ.values())
    ):
        raise TermError("diagrams need balanced linear seeds")
    src_word = underlying_list(op.source)
    tgt_pos = {name: k for k, name in enumerate(underlying_list(op.target), start=1)}
    perm = tuple(tgt_pos[name] for name in src_word)
    return reduce(
        TreeDiagram(n, tree_of_term(op.source), tree_of_term(op.target), perm)
    )


def random_reduced_diagram(n: int, rng, max_carets: int = 5) -> TreeDiagram:
    k = rng.randint(0, max_carets)
    t1, t2 = LEAF, LEAF
    for _ in range(k):
        t1 = expand(t1, rng.randint(1, leaf_count(t1)), n)
        t2 = expand(t2, rng.randint(1, leaf_count(t2)), n)
    perm = list(range(1, k * (n - 1) + 2))
    rng.shuffle(perm)
    return reduce(TreeDiagram(n, t1, t2, tuple(perm)))


# ---------------------------------------------------------------------------
# Exchange formats


def _tree_to_json(tree):
    if is_leaf(tree):
        return 0
    return [_tree_to_json(c) for c in tree]


def _tree_from_json(value):
    if value == 0:
        return LEAF
    return tuple(_tree_from_json(c) for c in value)


def to_json_dict(d: TreeDiagram) -> dict:
    return {
        "n": d.n,
        "domain": _tree_to_json(d.domain),
        "range": _tree_to_json(d.range),
        "perm": list(d.perm),
    }


def to_json(d: TreeDiagram) -> str:
    return json.dumps(to_json_dict(d), separators=(",", ":"))


def from_json_dict(data: dict) -> TreeDiagram:
    return TreeDiagram(
        data["n"],
        _tree_from_json(data["domain"]),
        _tree_from_json(data["range"]),
        tuple(data["perm"]),
    )


def _dot_tree(tree, tag: str, lines: list) -> dict:
    """Emit one tree; returns leaf index -> node id."""
    leaf_ids = {}
    counter = [0]

    def node_id(prefix) -> str:
        suffix = "_".join(str(k) for k in prefix)
        return f"{tag}_{suffix}" if suffix else tag

    def walk(node, prefix):
        me = node_id(prefix)
        if is_leaf(node):
            counter[0] += 1
            leaf_ids[counter[0]] = me
            lines.append(f'    {me} [shape=box, label="{counter[0]}"];')
            return
        lines.append(f'    {me} [shape=point];')
        for k, child in enumerate(node, start=1):
            walk(child, prefix + (k,))
            lines.append(f"    {me} -- {node_id(prefix + (k,))};")

    walk(tree, ())
    return leaf_ids


def to_dot(d: TreeDiagram) -> str:
    """Graphviz text: both trees, dashed edges joining paired leaves."""
    lines = ["graph tree_diagram {"]
    lines.append("  subgraph cluster_domain {")
    lines.append('    label="domain";')
    dom_ids = _dot_tree(d.domain, "d", lines)
    lines.append("  }")
    lines.append("  subgraph cluster_range {")
    lines.append('    label="range";')
    ran_ids = _dot_tree(d.range, "r", lines)
    lines.append("  }")
    for i in range(1, len(d.perm) + 1):
        lines.append(
            f"  {dom_ids[i]} -- {ran_ids[d.perm[i - 1]]} [style=dashed, constraint=false];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
