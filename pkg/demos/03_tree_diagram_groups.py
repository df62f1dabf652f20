#!/usr/bin/env python3
# Tree-pair diagrams, the groups they form, and the map from rewriting
# operators to reduced diagrams.

from treegroups.coherence import eval_diagram, parse_word
from treegroups.diagrams import (
    identity_diagram,
    invert_diagram,
    is_order_preserving,
    multiply,
    to_dot,
    to_json,
)

# the diagram of the root regrouping: right comb over left comb, leaves
# paired in order
X0 = eval_diagram(parse_word("a1[-]"), 2, "c")
print("X0:", to_json(X0))

# the same rule one level down gives the second standard generator
X1 = eval_diagram(parse_word("a1[2]"), 2, "c")
print("X1:", to_json(X1))

# multiplication expands both factors to a common middle tree and reduces
print("X0*X0:", to_json(multiply(X0, X0)))
print("X0*X0 == word a1[-] a1[-]:", multiply(X0, X0) == eval_diagram(parse_word("a1[-] a1[-]"), 2, "c"))
print("X0*X0^-1 is the identity:", multiply(X0, invert_diagram(X0)) == identity_diagram(2))

# conjugating X1 by X0 (apply X0, then X1, then X0 inverse) moves the
# generator one level deeper
X2 = eval_diagram(parse_word("a1[2.2]"), 2, "c")
print("X0 X1 X0^-1 == X2:", multiply(multiply(X0, X1), invert_diagram(X0)) == X2)

# order-preserving diagrams form the subgroup generated by regroupings;
# a twist leaves it
swap = eval_diagram(parse_word("s1[-]"), 2, "sc")
print("\nX0 order-preserving:  ", is_order_preserving(X0))
print("swap order-preserving:", is_order_preserving(swap))
print("swap squared:         ", multiply(swap, swap) == identity_diagram(2))

# diagrams export to Graphviz with dashed leaf pairings
print("\n" + to_dot(swap))
