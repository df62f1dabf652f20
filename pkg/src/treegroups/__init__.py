"""treegroups: rewriting-operator monoids, tree-pair diagram groups, and
coherence axiom verification for n-ary tuple theories."""

from . import coherence, diagrams, operators, terms, unify
from .terms import (
    App,
    Signature,
    Var,
    cat,
    catalan_signature,
    enumerate_terms,
    generalized_catalan,
    lmb,
    normalize_to_lmb,
    parse_term,
    format_term,
    rank,
    underlying_list,
)
from .unify import match, mgu
from .operators import (
    EMPTY,
    Rule,
    Seed,
    Theory,
    TranslatedRule,
    catalan_theory,
    compose,
    congruent,
    eval_word,
    symmetric_catalan_theory,
    translated_seed,
)
from .diagrams import TreeDiagram, identity_diagram, multiply, to_diagram
from .coherence import (
    Generator,
    check_axioms,
    check_coherence,
    check_moore,
    eval_diagram,
    fill_square,
    parse_word,
    format_word,
    positive_paths,
    words_equal,
)

__version__ = "0.1.0"

__all__ = [
    "App",
    "EMPTY",
    "Generator",
    "Rule",
    "Seed",
    "Signature",
    "Theory",
    "TranslatedRule",
    "TreeDiagram",
    "Var",
    "cat",
    "catalan_signature",
    "catalan_theory",
    "check_axioms",
    "check_coherence",
    "check_moore",
    "coherence",
    "compose",
    "congruent",
    "diagrams",
    "enumerate_terms",
    "eval_diagram",
    "eval_word",
    "fill_square",
    "format_term",
    "format_word",
    "generalized_catalan",
    "identity_diagram",
    "lmb",
    "match",
    "mgu",
    "multiply",
    "normalize_to_lmb",
    "operators",
    "parse_term",
    "parse_word",
    "positive_paths",
    "rank",
    "symmetric_catalan_theory",
    "terms",
    "to_diagram",
    "translated_seed",
    "underlying_list",
    "unify",
    "words_equal",
]
