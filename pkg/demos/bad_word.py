"""
A reduced word that breaks Levi membership
==========================================

For C3 and node 3 the word 3 2 3 2 1 2 3 2 1 interleaves radical and Levi
roots.  The grading identity then has a solution with radical terms, and the
commutator really does leave the Levi subalgebra.
"""

from cominuscule import parabolic
from cominuscule.convex import check_levi_split
from cominuscule.feasibility import PairInstance, radical_positions, oracle
from cominuscule.roots import roots_from_word
from cominuscule.uq import UqAlgebra, in_levi, verify_theorem
from cominuscule.uq.braid import commutator_for

p = parabolic("C3", 3)
word = (3, 2, 3, 2, 1, 2, 3, 2, 1)
order, reduced = roots_from_word(p.root_system, word)
print("reduced:", reduced, "split:", check_levi_split(order, p).value)

pos = radical_positions(p, order)
for n, k in enumerate(pos, start=1):
    print(f"xi_{n} = beta_{k} = {order[k - 1]}")

# xi_4 - xi_2 = xi_5 - xi_1: a radical root before and after the pair
inst = PairInstance.create(p, order, pos[3], pos[1])
v = oracle(inst)
print(v.outcome.value)
for w in v.witness:
    print(f"  {'+' if w.side == 'after' else '-'}{w.coeff} * {w.root} (position {w.position})")

alg = UqAlgebra.of(p.root_system)
x = commutator_for(alg, word, inst.i_pos, inst.j_pos)
print("[E_xi4, F_xi2] in Levi:", in_levi(x, p.S))

# Every failing pair for this word
rep = verify_theorem(p, word)
for r in rep.failures:
    print("  not in Levi:", r.xi_i, r.xi_j)

# A word that keeps the Levi roots at one end restores the property;
# the conjecture scan checks all such orders combinatorially
from cominuscule.feasibility import conjecture_scan
print(conjecture_scan(p).to_dict()["violations"])
