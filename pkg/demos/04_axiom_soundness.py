#!/usr/bin/env python3
# The relation families that present the diagram groups, verified by
# evaluating both sides of every instance to a reduced diagram.

from treegroups.coherence import (
    check_axioms,
    dual_hexagon,
    format_word,
    hexagon,
    pentagon,
    three_cycle,
    words_equal,
)

# the binary instances are the classical pentagon and hexagon
p = pentagon(2, 1)
print("pentagon n=2: ", format_word(p.lhs), "==", format_word(p.rhs))
print("holds:", words_equal(p.lhs, p.rhs, 2, "c"))

h = hexagon(2, 1)
print("hexagon n=2:  ", format_word(h.lhs), "==", format_word(h.rhs))
print("holds:", words_equal(h.lhs, h.rhs, 2, "sc"))

# higher arities add new families; n=3 shows all seven
print("\npentagon n=3: ", format_word(pentagon(3, 1).lhs), "==", format_word(pentagon(3, 1).rhs))
print("3-cycle  n=3: ", format_word(three_cycle(3, 1).lhs), "==", format_word(three_cycle(3, 1).rhs))
print("dual hexagon: ", format_word(dual_hexagon(3, 2).lhs), "==", format_word(dual_hexagon(3, 2).rhs))

# sweep every family, every legal index, base addresses up to length 1
for n in (2, 3, 4):
    ok, lines = check_axioms(n, "sc", max_addr=1)
    print(f"\nn={n}: {len(lines)} instances, all pass: {ok}")
    for line in lines[:4]:
        print("  " + line)
    if len(lines) > 4:
        print("  ...")
