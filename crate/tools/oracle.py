"""Independent reference values for the Rust test fixtures.

Roots are found by brute force over a box (no reflections), induced
subgraphs are typed from degree data with networkx, and simple dimension
vectors are found by subset-sum search. Run: python3 tools/oracle.py
"""
import itertools
import json

import networkx as nx
import numpy as np


def edges(family, n):
    if family == "A":
        return [(i - 1, i) for i in range(1, n)]
    if family == "D":
        return [(i - 1, i) for i in range(1, n - 2)] + [(n - 3, n - 2), (n - 3, n - 1)]
    return [(i - 1, i) for i in range(1, n - 1)] + [(2, n - 1)]


def types():
    out = [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)]
    return out + [("E", n) for n in (6, 7, 8)]


def cartan(n, es):
    c = 2 * np.eye(n, dtype=np.int64)
    for a, b in es:
        c[a, b] -= 1
        c[b, a] -= 1
    return c


def positive_roots(c):
    n = len(c)
    grid = np.array(list(itertools.product(range(7), repeat=n)), dtype=np.int64)
    q = np.einsum("ki,ij,kj->k", grid, c, grid)
    return [tuple(map(int, r)) for r in grid[q == 2]]


def label(g):
    k = g.number_of_nodes()
    degs = sorted(d for _, d in g.degree())
    if k == 1 or degs[-1] <= 2:
        return ("A", k)
    centre = max(g.degree(), key=lambda x: x[1])[0]
    h = g.copy()
    h.remove_node(centre)
    arms = sorted(len(c) for c in nx.connected_components(h))
    if arms[:2] == [1, 1]:
        return ("D", k)
    return ("E", k)


def configurations(family, n):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges(family, n))
    seen = set()
    for mask in range(1 << n):
        sub = g.subgraph([i for i in range(n) if mask >> i & 1])
        parts = sorted(label(sub.subgraph(c)) for c in nx.connected_components(sub))
        seen.add(tuple(f"{f}{r}" for f, r in parts))
    return sorted(seen)


def main():
    report = {}
    for family, n in types():
        c = cartan(n, edges(family, n))
        pos = positive_roots(c)
        top = max(pos, key=sum)
        confs = configurations(family, n)
        report[f"{family}{n}"] = {
            "roots": 2 * len(pos),
            "maximal": list(top),
            "configurations": len(confs),
            "largest_configuration": max(len(x) for x in confs),
        }
        if n <= 4:
            report[f"{family}{n}"]["all_configurations"] = [list(x) for x in confs]
    print(json.dumps(report, indent=1))


if __name__ == "__main__":
    main()
