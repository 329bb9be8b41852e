"""
Engel adjacency and exporting graphs
====================================

Two elements are Engel-adjacent when iterating c -> [c, y] from [x, y]
reaches the identity (in one direction or the other).  In S3 this fails
only for pairs of distinct transpositions.
"""

from groupgraphs import build_graph, export, make_family
from groupgraphs.core import iterated_commutator

S3 = make_family("S3")
x, y = S3.index("(1 2)"), S3.index("(1 3)")
print([S3.labels[iterated_commutator(S3, x, y, k)] for k in range(1, 6)])

engel = build_graph("engel", S3)
print(export(engel, "dot").decode())
print(export(build_graph("com", make_family("C2")), "json").decode(), end="")
