"""
Sylow structure predicts when graphs agree
==========================================

SNorm = Nilp exactly when every Sylow subgroup is Dedekind, and
Com = SNorm exactly when there is no SNNC subgroup.  Here both sides are
computed separately for a handful of groups.
"""

from groupgraphs import (build_graph, graphs_equal, has_snnc_subgroup, is_dedekind,
                         make_family, materialize, sylow_subgroup)
from groupgraphs.core import prime_factors

for spec in ["S3", "S4", "SL(2,3)", "x(Q8,C3)", "x(D4,C2)"]:
    G = make_family(spec)
    ded = all(is_dedekind(materialize(sylow_subgroup(G, p))) for p in prime_factors(G.order))
    same = graphs_equal(build_graph("snorm", G), build_graph("nilp", G))
    H = has_snnc_subgroup(G)
    com_eq = graphs_equal(build_graph("com", G), build_graph("snorm", G))
    print(f"{spec:<10} Sylows Dedekind={ded!s:<5} SNorm=Nilp={same!s:<5} "
          f"SNNC subgroup={'order %d' % H.order if H else 'none':<8} Com=SNorm={com_eq}")
