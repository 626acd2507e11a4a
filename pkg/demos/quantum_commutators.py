"""
Root vector commutators in U_q(g)
=================================

Build quantum root vectors with the braid automorphisms and check that
[E_xi, F_xi'] stays inside the Levi subalgebra for radical roots.
"""

import time

from cominuscule import parabolic
from cominuscule.posets import canonical_word
from cominuscule.roots import roots_from_word
from cominuscule.uq import (
    UqAlgebra, bootstrap, cartan_check, commutator, equal, in_levi, lusztig_T, root_vector,
    serre_element, is_zero, verify_theorem,
)

alg = UqAlgebra.of("A2")
E1, E2, F1 = alg.E(1), alg.E(2), alg.F(1)

# Products are kept as F-words * K * E-words
print(E1 * F1)

# Serre relations hold in the canonical form, not as literal words
u = serre_element(alg, 1, 2)
print("Serre element has", len(u.terms), "words; zero in U_q:", is_zero(u))

# The braid automorphism sends E_2 to a q-commutator of weight alpha_1 + alpha_2
print("T_1(E_2) =", lusztig_T(1, E2))
print("checks:", bootstrap(alg))

# C3 with its canonical reduced word
p = parabolic("C3", 3)
word = canonical_word(p)
c3 = UqAlgebra.of(p.root_system)
betas, _ = roots_from_word(p.root_system, word)
print("word", word)
for k, b in enumerate(betas, start=1):
    x = root_vector(c3, word, k)
    print(f"  E_{b}: {len(x.terms)} monomials, cartan check {cartan_check(c3, word, k)}")

t0 = time.perf_counter()
rep = verify_theorem(p, word)
print(f"{sum(r.in_levi for r in rep.pairs)}/{len(rep.pairs)} commutators in the Levi part "
      f"({time.perf_counter() - t0:.1f}s)")

# One of them written out: the radical content cancels
x = commutator(root_vector(c3, word, 4), root_vector(c3, word, 2, "F"))
print(len(x.terms), "monomials, in Levi:", in_levi(x, p.S))

# The inverse braid automorphism gives different root vectors, same answer
rep_inv = verify_theorem(p, word, "inv")
print("inverse version all in Levi:", rep_inv.all_in_levi)
