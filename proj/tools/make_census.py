#!/usr/bin/env python3
"""Regenerate tests/data/connected_n{4..7}.g6 from the networkx graph atlas."""
import os
import sys

import networkx as nx


def main() -> int:
    out_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "data")
    os.makedirs(out_dir, exist_ok=True)
    buckets = {n: [] for n in range(4, 8)}
    for g in nx.graph_atlas_g()[1:]:
        n = g.number_of_nodes()
        if n in buckets and nx.is_connected(g):
            line = nx.to_graph6_bytes(g, header=False).decode().strip()
            buckets[n].append(line)
    expected = {4: 6, 5: 21, 6: 112, 7: 853}
    for n, lines in buckets.items():
        if len(lines) != expected[n]:
            print(f"n={n}: got {len(lines)} graphs, expected {expected[n]}", file=sys.stderr)
            return 1
        path = os.path.join(out_dir, f"connected_n{n}.g6")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"wrote {path} ({len(lines)} graphs)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
