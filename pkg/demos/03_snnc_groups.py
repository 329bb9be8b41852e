"""
Building SNNC groups and recognising them
=========================================

make_snnc realises <a, b> with a^(p^alpha) = [a, b] central of order p.
classify_type_b then recovers the row of the classification from the table
alone, and (a, ab) is a generating pair adjacent in the normaliser graph.
"""

from groupgraphs import (SnncParams, classify_type_b, find_generating_adjacent_pair,
                         make_family, make_snnc)
from groupgraphs.core import closure

for p, alpha, beta in [(2, 2, 1), (3, 1, 1), (3, 2, 1)]:
    P = make_snnc(SnncParams(p, alpha, beta))
    a, b = P.generators["a"], P.generators["b"]
    ab = P.mul[a, b]
    twisted = P.mul[P.mul[a, ab], P.inv[a]] == P.power(ab, 1 + p ** alpha)
    row = classify_type_b(P)
    print(P.name, "order", P.order, "case", row.case_tag,
          "a(ab)a^-1 = (ab)^(1+p^alpha):", bool(twisted),
          "<a,ab> = P:", closure(P, {a, ab}).order == P.order)

# Non-SNNC groups of the same shape have no such pair.
for spec in ["D4", "Heis(3)"]:
    P = make_family(spec)
    print(spec, classify_type_b(P).case_tag, find_generating_adjacent_pair(P))
