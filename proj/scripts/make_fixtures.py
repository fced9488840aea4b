#!/usr/bin/env python3
"""Regenerates the edge-list fixtures under data/.

karate.edges      Zachary karate club (1-based labels, as usually distributed).
synthetic-379.edges  seeded clustered random graph with the size of ca-netscience
                  (379 vertices, 914 edges); stands in for the real dataset,
                  which is not vendored here.
"""
import random
import sys
from pathlib import Path

import networkx as nx

out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data")


def write(path, edges, header):
    with open(path, "w") as f:
        for line in header:
            f.write(f"% {line}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")


karate = nx.karate_club_graph()
write(out / "karate.edges",
      sorted((min(u, v) + 1, max(u, v) + 1) for u, v in karate.edges()),
      ["Zachary karate club, 34 vertices, 78 edges, 1-based ids"])

rng = random.Random(379914)
g = nx.powerlaw_cluster_graph(379, 2, 0.6, seed=379914)
nodes = list(g.nodes())
while g.number_of_edges() < 914:
    u, v = rng.sample(nodes, 2)
    g.add_edge(u, v)
assert nx.is_connected(g) and g.number_of_edges() == 914
write(out / "synthetic-379.edges",
      sorted((min(u, v) + 1, max(u, v) + 1) for u, v in g.edges()),
      ["synthetic clustered graph: powerlaw_cluster_graph(379, 2, 0.6, seed=379914)",
       "topped up with uniform random edges to 914, 1-based ids"])
