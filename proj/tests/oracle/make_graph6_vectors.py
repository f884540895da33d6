"""Writes tests/data/graph6_reference.txt from networkx's graph6 codec.

Each line: <graph6> <TAB> <n> <TAB> <space-separated u-v edges>.
"""
import pathlib

import networkx as nx

rows = []
graphs = [nx.empty_graph(0), nx.empty_graph(1), nx.complete_graph(2), nx.path_graph(3),
          nx.empty_graph(3), nx.cycle_graph(3), nx.cycle_graph(4), nx.complete_graph(5),
          nx.petersen_graph()]
for n, p in [(5, 0.5), (7, 0.3), (9, 0.6), (13, 0.4), (20, 0.5), (40, 0.2), (62, 0.4), (63, 0.4),
             (70, 0.1), (100, 0.05), (200, 0.02)]:
    graphs.append(nx.gnp_random_graph(n, p, seed=n))
for G in graphs:
    g6 = nx.to_graph6_bytes(G, header=False).decode().strip()
    edges = " ".join(f"{min(u, v)}-{max(u, v)}" for u, v in sorted(G.edges()))
    rows.append(f"{g6}\t{G.number_of_nodes()}\t{edges}")
out = pathlib.Path(__file__).resolve().parent.parent / "data" / "graph6_reference.txt"
out.write_text("\n".join(rows) + "\n")
print(f"wrote {len(rows)} vectors to {out}")
