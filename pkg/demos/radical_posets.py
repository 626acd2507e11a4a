"""
Radical roots of cominuscule parabolics
=======================================

Which simple roots give a cominuscule parabolic, what the radical roots look
like, and how they sit on a grid.
"""

from cominuscule import build_root_system, cominuscule_nodes, parabolic, radical_poset, box_embedding
from cominuscule.cli import render_poset
from cominuscule.posets import check_lines_lemma, lines_table

# A node is cominuscule when its simple root appears once in the highest root
for name in ["A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"]:
    rs = build_root_system(name)
    print(f"{name:3s} highest root {rs.highest_root}  nodes {sorted(cominuscule_nodes(rs))}")

# The radical roots of C4 (node 4) ordered by height, with their covers
p = parabolic("C4", 4)
poset = radical_poset(p)
print(len(poset.elements), "radical roots,", len(poset.covers), "covers")
for lo, hi, lab in poset.covers:
    print(f"  {lo} -> {hi}  (+alpha_{lab})")

# Every such poset fits on a grid: diagonals step by the a-labels,
# columns by the d-labels.  Comparability is just coordinate-wise <=
emb = box_embedding(poset)
print("a-labels", emb.a_labels, "d-labels", emb.d_labels)
print(render_poset(poset, emb, "ascii"))

# E6 is less regular: the diagonals start at different columns
e6 = box_embedding(radical_poset(parabolic("E6", 5)))
print("E6 first columns", e6.F, "last columns", e6.L)
print(render_poset(e6.poset, e6, "ascii"))

# The lines table: for each diagonal, labels running along the next one
# under the current diagonal's last vertex.  An a-label only ever shows up
# in a later line.
for a, labels in lines_table(e6):
    print(f"  a = alpha_{a}: line {labels}")
print("lines lemma holds:", check_lines_lemma(e6))

# A DOT file for graphviz
with open("e6_poset.dot", "w") as fh:
    fh.write(render_poset(e6.poset, e6, "dot"))
