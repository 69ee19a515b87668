#!/usr/bin/env python3
"""Regenerate the graph6 assets under data/.

Every asset is built from a classical construction that does not go through
the C++ library, so loading it there is an independent cross-check.  The
library still validates each asset against its expected intersection array
at load time.

Usage: python3 tools/make_assets.py [outdir]
"""

import itertools
import os
import sys

import networkx as nx


def lcf(n, shifts, repeats):
    return nx.LCF_graph(n, shifts, repeats)


def coxeter():
    # Triples of Z7 that are not lines of the Fano plane {0,1,3}+i, adjacent
    # when disjoint.
    lines = {frozenset(((0 + i) % 7, (1 + i) % 7, (3 + i) % 7)) for i in range(7)}
    verts = [frozenset(t) for t in itertools.combinations(range(7), 3)
             if frozenset(t) not in lines]
    g = nx.Graph()
    g.add_nodes_from(range(len(verts)))
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if not (a & verts[j]):
                g.add_edge(i, j)
    return g


def shrikhande():
    # Seidel switching of the 4x4 rook's graph with respect to the
    # transversal {(i,i)}.
    rook = nx.Graph()
    cells = [(i, j) for i in range(4) for j in range(4)]
    idx = {c: k for k, c in enumerate(cells)}
    rook.add_nodes_from(range(16))
    for a, b in itertools.combinations(cells, 2):
        if a[0] == b[0] or a[1] == b[1]:
            rook.add_edge(idx[a], idx[b])
    diag = {idx[(i, i)] for i in range(4)}
    g = nx.Graph()
    g.add_nodes_from(range(16))
    for u, v in itertools.combinations(range(16), 2):
        adj = rook.has_edge(u, v)
        if (u in diag) != (v in diag):
            adj = not adj
        if adj:
            g.add_edge(u, v)
    return g


def sylvester():
    # Hoffman-Singleton graph minus an edge and all neighbours of its ends.
    hs = nx.hoffman_singleton_graph()
    hs = nx.convert_node_labels_to_integers(hs, ordering="sorted")
    u, v = min(hs.edges())
    drop = {u, v} | set(hs[u]) | set(hs[v])
    keep = sorted(set(hs) - drop)
    return nx.convert_node_labels_to_integers(hs.subgraph(keep).copy(),
                                              ordering="sorted")


def _psl2(p):
    # PSL(2,p) as permutations of the projective line {0..p-1, inf=p}.
    inf = p

    def mobius(a, b, c, d):
        img = []
        for x in range(p + 1):
            if x == inf:
                img.append(inf if c == 0 else (a * pow(c, -1, p)) % p)
            else:
                den = (c * x + d) % p
                img.append(inf if den == 0 else ((a * x + b) * pow(den, -1, p)) % p)
        return tuple(img)

    gens = [mobius(1, 1, 0, 1), mobius(0, p - 1, 1, 0)]
    ident = tuple(range(p + 1))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = tuple(g[e[x]] for x in range(p + 1))
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(elems)


def _compose(a, b):
    # apply a, then b
    return tuple(b[a[x]] for x in range(len(a)))


def _order(a):
    ident = tuple(range(len(a)))
    k, x = 1, a
    while x != ident:
        x = _compose(x, a)
        k += 1
    return k


def _closure(gens, limit):
    ident = tuple(range(len(gens[0])))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = _compose(e, g)
                if h not in elems:
                    elems.add(h)
                    if len(elems) > limit:
                        return None
                    nxt.append(h)
        frontier = nxt
    return elems


def biggs_smith():
    # Orbital graph of PSL(2,17) acting on the 102 cosets of an S4 subgroup,
    # taken along the unique suborbit of length 3.
    group = _psl2(17)
    assert len(group) == 2448
    order4 = [g for g in group if _order(g) == 4]
    order3 = [g for g in group if _order(g) == 3]
    sub = None
    a = order4[0]
    for b in order3:
        h = _closure([a, b], 24)
        if h is not None and len(h) == 24:
            sub = h
            break
    assert sub is not None
    index = {g: i for i, g in enumerate(group)}
    coset_of = [-1] * len(group)
    cosets = []
    for g in group:
        if coset_of[index[g]] >= 0:
            continue
        cid = len(cosets)
        members = [_compose(h, g) for h in sub]  # right coset Hg
        for m in members:
            coset_of[index[m]] = cid
        cosets.append(g)
    assert len(cosets) == 102
    base = coset_of[index[tuple(range(18))]]

    def act(cid, g):
        return coset_of[index[_compose(cosets[cid], g)]]

    # suborbits of H on cosets
    seen = set()
    suborbits = []
    for c in range(102):
        if c in seen:
            continue
        orb = {act(c, h) for h in sub}
        seen |= orb
        suborbits.append(sorted(orb))
    three = [o for o in suborbits if len(o) == 3]
    assert len(three) == 1
    g = nx.Graph()
    g.add_nodes_from(range(102))
    for c in three[0]:
        for x in group:
            g.add_edge(act(base, x), act(c, x))
    return g


def halves(g):
    top, bottom = nx.bipartite.sets(g)
    out = []
    for side in (sorted(top), sorted(bottom)):
        h = nx.Graph()
        pos = {v: i for i, v in enumerate(side)}
        h.add_nodes_from(range(len(side)))
        for v in side:
            for w in g[v]:
                for x in g[w]:
                    if x != v and pos[x] > pos[v]:
                        h.add_edge(pos[v], pos[x])
        out.append(h)
    return out


def canon(g):
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


ASSETS = {
    "petersen": ([3, 2], [1, 1], lambda: nx.petersen_graph(), "networkx petersen_graph"),
    "pappus": ([3, 2, 2, 1], [1, 1, 2, 3], lambda: lcf(18, [5, 7, -7, 7, -7, -5], 3),
               "LCF [5,7,-7,7,-7,-5]^3"),
    "desargues": ([3, 2, 2, 1, 1], [1, 1, 2, 2, 3], lambda: lcf(20, [5, -5, 9, -9], 5),
                  "LCF [5,-5,9,-9]^5"),
    "dodecahedron": ([3, 2, 1, 1, 1], [1, 1, 1, 2, 3], lambda: nx.dodecahedral_graph(),
                     "networkx dodecahedral_graph"),
    "coxeter": ([3, 2, 2, 1], [1, 1, 1, 2], coxeter,
                "non-line triples of the Fano plane, adjacent when disjoint"),
    "tutte-8-cage": ([3, 2, 2, 2], [1, 1, 1, 3], lambda: lcf(30, [-13, -9, 7, -7, 9, 13], 5),
                     "LCF [-13,-9,7,-7,9,13]^5"),
    "foster": ([3, 2, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 2, 2, 2, 3],
               lambda: lcf(90, [17, -9, 37, -37, 9, -17], 15), "LCF [17,-9,37,-37,9,-17]^15"),
    "biggs-smith": ([3, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 1, 1, 3], biggs_smith,
                    "orbital graph of PSL(2,17) on cosets of S4, suborbit of length 3"),
    "tutte-12-cage": ([3, 2, 2, 2, 2, 2], [1, 1, 1, 1, 1, 3],
                      lambda: lcf(126, [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21,
                                        57, 11, -21, -57, 59, -17], 7),
                      "LCF [17,27,-13,-59,-35,35,-11,13,-53,53,-27,21,57,11,-21,-57,59,-17]^7"),
    "shrikhande": ([6, 3], [1, 2], shrikhande,
                   "Seidel switch of the 4x4 rook's graph on the diagonal transversal"),
    "sylvester": ([5, 4, 2], [1, 1, 4], sylvester,
                  "Hoffman-Singleton minus an edge and the neighbourhoods of its ends"),
}


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "data")
    os.makedirs(outdir, exist_ok=True)
    notes = ["# Graph assets", "",
             "graph6 files, one graph per file.  Regenerate with "
             "`python3 tools/make_assets.py`.", "",
             "| file | n | intersection array | construction |",
             "|---|---|---|---|"]
    built = {}
    for name, (b, c, make, how) in ASSETS.items():
        g = canon(make())
        b_exp, c_exp = b, c
        got = nx.intersection_array(g)
        assert list(got[0]) == b_exp and list(got[1]) == c_exp, (name, got)
        built[name] = g
    h1, h2 = halves(built["tutte-12-cage"])
    for name, h in (("gh22-points-a", h1), ("gh22-points-b", h2)):
        got = nx.intersection_array(h)
        assert list(got[0]) == [6, 4, 4] and list(got[1]) == [1, 1, 3], (name, got)
        built[name] = canon(h)
    ASSETS["gh22-points-a"] = (None, None, None, "halved graph of tutte-12-cage, colour class 0")
    ASSETS["gh22-points-b"] = (None, None, None, "halved graph of tutte-12-cage, colour class 1")
    for name, g in built.items():
        data = nx.to_graph6_bytes(g, header=False).decode().strip()
        with open(os.path.join(outdir, name + ".g6"), "w") as fh:
            fh.write(data + "\n")
        b, c = nx.intersection_array(g)
        arr = "{" + ",".join(map(str, b)) + ";" + ",".join(map(str, c)) + "}"
        notes.append(f"| {name}.g6 | {g.number_of_nodes()} | {arr} | {ASSETS[name][3]} |")
    with open(os.path.join(outdir, "PROVENANCE.md"), "w") as fh:
        fh.write("\n".join(notes) + "\n")


if __name__ == "__main__":
    main()
