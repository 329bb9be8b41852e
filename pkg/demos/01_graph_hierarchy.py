"""
The graph hierarchy on a few small groups
=========================================

Builds every undirected graph on S3, Q8 and SL(2,3) and prints edge counts.
Each row should be non-decreasing from pow to nilp.
"""

from groupgraphs import build_graph, edge_count, make_family
from groupgraphs.graphs import GraphKind

kinds = [GraphKind.POW, GraphKind.EPOW, GraphKind.COM, GraphKind.SNORM,
         GraphKind.NILP, GraphKind.ENGEL, GraphKind.NGEN]

print(f"{'group':<10}" + "".join(f"{k.value:>8}" for k in kinds))
for spec in ["S3", "Q8", "D4", "SL(2,3)", "A5"]:
    G = make_family(spec)
    counts = [edge_count(build_graph(k, G)) for k in kinds]
    print(f"{spec:<10}" + "".join(f"{c:>8}" for c in counts))

# In S3 the first five graphs coincide, and Engel has 6 more edges.
