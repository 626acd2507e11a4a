"""Cominuscule parabolics: radical-root posets, convex orders and U_q(g) commutators."""

from __future__ import annotations

__version__ = "0.1.0"

from .convex import (
    ConvexityError,
    LeviSplit,
    check_levi_split,
    enumerate_split_orders,
    is_convex,
    order_to_word,
    word_to_order,
)
from .feasibility import (
    Outcome,
    PairInstance,
    Verdict,
    conjecture_scan,
    decide_lemma,
    eliminate,
    oracle,
)
from .posets import (
    BoxEmbedding,
    ParabolicData,
    RadicalPoset,
    box_embedding,
    canonical_order,
    canonical_word,
    check_lines_lemma,
    cominuscule_nodes,
    lines,
    parabolic,
    radical_poset,
    split_roots,
    xi_SB,
)
from .qarith import LaurentPoly, RatFunc, q_binomial, q_factorial, q_integer
from .roots import DynkinType, RootSystem, build_root_system, longest_word, roots_from_word
