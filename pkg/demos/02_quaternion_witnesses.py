"""
Why Q8 separates commuting from normalising
===========================================

Every cyclic subgroup of Q8 is normal, so the symmetric normaliser graph is
complete.  The 12 missing commuting edges are exactly the witness pairs.
"""

from groupgraphs import (build_graph, edge_count, make_family, snorm_witness_pairs,
                         verify_witness_subgroup)

Q8 = make_family("Q8")
print("SNorm edges:", edge_count(build_graph("snorm", Q8)))
print("Com edges:  ", edge_count(build_graph("com", Q8)))

pairs = snorm_witness_pairs(Q8)
for w in pairs[:4]:
    print(" ", Q8.labels[w.x], Q8.labels[w.y])
print(f"  ... {len(pairs)} pairs")

# every pair generates a subgroup whose derived subgroup is central of order 2
facts = verify_witness_subgroup(Q8, pairs[0])
print(facts)
