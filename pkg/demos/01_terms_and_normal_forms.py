#!/usr/bin/env python3
# Terms over an n-ary tuple symbol, their leaf words, ranks, and the
# left-comb normal form.

from treegroups import (
    catalan_signature,
    enumerate_terms,
    format_term,
    generalized_catalan,
    lmb,
    normalize_to_lmb,
    parse_term,
    rank,
    underlying_list,
)

sig2 = catalan_signature(2)

# parse a binary bracketing and look at its leaf word
t = parse_term("(a ((b c) (d e)))", sig2)
print("term:         ", format_term(t, sig2))
print("leaf word:    ", underlying_list(t))
print("rank:         ", rank(t))  # 0 exactly on left combs

# normalize to the left comb; the step list records (rule index, address)
normal, steps = normalize_to_lmb(t, 2)
print("normal form:  ", format_term(normal, sig2))
print("steps applied:", steps)
print("same leaves:  ", underlying_list(normal) == underlying_list(t))

# left combs can be built directly from a leaf word
print("lmb of a..e:  ", format_term(lmb(list("abcde"), 2), sig2))

# ternary bracketings work the same way; the word length must be n + k(n-1)
sig3 = catalan_signature(3)
u = parse_term("(x1 (x2 x3 x4) x5)", sig3)
print("\nternary term: ", format_term(u, sig3))
print("rank:         ", rank(u))
print("normal form:  ", format_term(normalize_to_lmb(u, 3)[0], sig3))

# shape counting: the number of n-ary trees with k internal nodes is the
# generalized Catalan number C(nk, k) / ((n-1)k + 1)
print()
for n, k in [(2, 3), (2, 5), (3, 3), (4, 2)]:
    shapes = enumerate_terms(n, k)
    print(f"n={n} k={k}: enumerated {len(shapes)}, formula {generalized_catalan(n, k)}")
