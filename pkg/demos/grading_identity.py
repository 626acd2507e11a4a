"""
When can radical coefficients survive?
======================================

For a convex order beta_1 < ... < beta_N and two radical roots at positions
i > j, look for

    beta_i - beta_j = sum_{k>i} b_k beta_k - sum_{k<j} a_k beta_k

with nonnegative integers and some radical coefficient nonzero.  If none
exists the commutator of the matching root vectors lies in the Levi part.
"""

from cominuscule import parabolic, radical_poset, box_embedding, canonical_order
from cominuscule.feasibility import (
    PairInstance, canonical_instances, check_lemma_trace, decide_lemma, eliminate, oracle,
)

p = parabolic("C3", 3)
emb = box_embedding(radical_poset(p))
order = canonical_order(emb)
for k, b in enumerate(order, start=1):
    print(k, b, "radical" if p.is_radical(b) else "levi")

# Drop everything comparable to the pair; what remains must balance
inst = PairInstance.create(p, order, 3, 2, emb)
B, S = eliminate(inst)
print("after xi_i, not above it:", B)
print("before xi_j, not below it:", S)
print(decide_lemma(inst).trace)

# E7 is where the elimination argument has to work hardest
e7 = parabolic("E7", 6)
insts = canonical_instances(e7)
cases = {}
for inst in insts:
    v = decide_lemma(inst)
    assert not check_lemma_trace(inst, v)
    cases[v.trace["case"]] = cases.get(v.trace["case"], 0) + 1
print(len(insts), "E7 pairs:", cases)

# One of the pairs that needed the auxiliary roots
inst = next(i for i in insts if decide_lemma(i).trace["case"] == "lemma")
tr = decide_lemma(inst).trace
print("xi_i", inst.xi_i, "xi_j", inst.xi_j)
print("xi_S", tr["xi_S"], "xi_B", tr["xi_B"], "separating index", tr["m"])

# The oracle does not need a split order: it searches the identity directly,
# bounded by exact linear functionals coming from the reduced word
v = oracle(inst, coeff_cap=4)
print(v.outcome.value, v.trace)
