"""Oriented multigraphs with a total edge order, and their matroid data.

A Graph is finite, connected, oriented, and may contain loops and parallel
edges.  Edge ids are arbitrary hashable labels that stay stable under
deletion and contraction, which is what lets subgraph computations talk
about the same edges as the ambient graph.  All orderings of edges go
through the graph's total edge order, never through the raw labels.
"""

import itertools
import json
import os
import re

from .errors import (
    BondDeletion,
    DisconnectedGraph,
    EmptyGraph,
    NotACotree,
    NotASpanningTree,
    ParseError,
    ResourceGuard,
)
from .intlinalg import det, solve_exact

# Exhaustive subset enumerations are cut off beyond this many edges.
MAX_ENUM_EDGES = int(os.environ.get("CKS_KIT_MAX_ENUM_EDGES", "14"))


class Graph:
    """Connected oriented multigraph with totally ordered edges."""

    def __init__(self, vertices, heads, tails, order):
        self.vertices = tuple(vertices)
        self.head = dict(heads)
        self.tail = dict(tails)
        self.order = tuple(order)
        self.eids = frozenset(self.order)
        self._pos = {e: i for i, e in enumerate(self.order)}
        if len(self.order) == 0 and len(self.vertices) != 1:
            # the one-vertex edgeless graph is allowed: it is what remains
            # after deleting every edge of an all-loops graph
            raise EmptyGraph("an edgeless graph must consist of one vertex")
        if len(self._pos) != len(self.order):
            raise ValueError("duplicate edge ids")
        vset = set(self.vertices)
        for e in self.order:
            if self.head[e] not in vset or self.tail[e] not in vset:
                raise ValueError(f"edge {e!r} references a missing vertex")
        if not _connected(self.vertices, [(self.head[e], self.tail[e]) for e in self.order]):
            raise DisconnectedGraph("graph must be connected")

    # -- basic queries ----------------------------------------------------

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.order)

    def genus(self):
        return self.n_edges - self.n_vertices + 1

    def pos(self, e):
        return self._pos[e]

    def sort_edges(self, edges):
        return sorted(edges, key=self._pos.__getitem__)

    def is_loop(self, e):
        return self.head[e] == self.tail[e]

    def __repr__(self):
        return f"Graph(|V|={self.n_vertices}, |E|={self.n_edges}, genus={self.genus()})"

    def same_labeled(self, other):
        """Equality as labeled graphs: same edges, order, and incidences
        up to the identification of merged vertices."""
        if self.order != other.order:
            return False
        return all(
            self.head[e] == other.head[e] and self.tail[e] == other.tail[e]
            for e in self.order
        )

    # -- deletion / contraction ------------------------------------------

    def delete(self, edges):
        """Remove an edge set; raises BondDeletion if connectivity breaks."""
        edges = frozenset(edges)
        if not edges <= self.eids:
            raise ValueError("not a subset of the edge set")
        keep = [e for e in self.order if e not in edges]
        g = _build_unchecked(self.vertices, self.head, self.tail, keep)
        if g is None:
            raise BondDeletion(f"deleting {sorted(map(str, edges))} disconnects the graph")
        return g

    def contract(self, edges):
        """Contract an edge set; merged vertices become frozensets of the
        originals so that delete/contract commute on the nose."""
        edges = frozenset(edges)
        if not edges <= self.eids:
            raise ValueError("not a subset of the edge set")
        keep = [e for e in self.order if e not in edges]
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in edges:
            a, b = find(self.head[e]), find(self.tail[e])
            if a != b:
                parent[a] = b
        classes = {}
        for v in self.vertices:
            classes.setdefault(find(v), set()).add(_flatten_vertex(v))
        vmap = {}
        for root, members in classes.items():
            merged = frozenset().union(*members)
            for v in self.vertices:
                if find(v) == root:
                    vmap[v] = merged
        verts = sorted(set(vmap.values()), key=lambda s: sorted(map(str, s)))
        heads = {e: vmap[self.head[e]] for e in keep}
        tails = {e: vmap[self.tail[e]] for e in keep}
        return Graph(verts, heads, tails, keep)


def _flatten_vertex(v):
    """Vertices of contracted graphs are frozensets of base vertices."""
    if isinstance(v, frozenset):
        return v
    return frozenset([v])


def _build_unchecked(vertices, head, tail, keep):
    try:
        return Graph(vertices, {e: head[e] for e in keep},
                     {e: tail[e] for e in keep}, keep)
    except (DisconnectedGraph, EmptyGraph):
        return None


def _connected(vertices, incidences):
    verts = list(vertices)
    if not verts:
        return False
    adj = {v: [] for v in verts}
    for a, b in incidences:
        adj[a].append(b)
        adj[b].append(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def connected_components(edge_list):
    """Split a raw (head, tail) edge list into connected components.

    Convenience splitter for inputs that are not connected; returns a list
    of edge lists (indices into the original list are not preserved).
    """
    verts = {v for h, t in edge_list for v in (h, t)}
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for h, t in edge_list:
        a, b = find(h), find(t)
        if a != b:
            parent[a] = b
    groups = {}
    for h, t in edge_list:
        groups.setdefault(find(h), []).append((h, t))
    return list(groups.values())


def build_graph(edge_list, edge_order=None):
    """Build a Graph from (head, tail) pairs with canonical vertex ids.

    Vertices are relabeled 0..n-1 in order of first appearance; edges get
    ids 0..m-1 in listed order.  edge_order optionally permutes the edge
    ids to override the default (listed) total order.
    """
    if not edge_list:
        raise EmptyGraph("empty edge list")
    vmap = {}
    for h, t in edge_list:
        for v in (h, t):
            if v not in vmap:
                vmap[v] = len(vmap)
    m = len(edge_list)
    if edge_order is None:
        edge_order = list(range(m))
    if sorted(edge_order) != list(range(m)):
        raise ValueError("edge_order must be a permutation of 0..m-1")
    heads = {i: vmap[edge_list[i][0]] for i in range(m)}
    tails = {i: vmap[edge_list[i][1]] for i in range(m)}
    return Graph(range(len(vmap)), heads, tails, edge_order)


# ---------------------------------------------------------------------------
# parsing / serialization

def graph_from_json(text):
    """Parse {"vertices": n, "edges": [[h,t],...], "order": [ids]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("expected an object with an 'edges' field")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 for e in edges):
        raise ParseError("'edges' must be a list of [head, tail] pairs")
    n = data.get("vertices")
    if n is not None:
        used = {v for e in edges for v in e}
        if used and (min(used) < 0 or max(used) >= n):
            raise ParseError("edge endpoint outside declared vertex range")
    order = data.get("order")
    try:
        return build_graph([tuple(e) for e in edges], edge_order=order)
    except (EmptyGraph, DisconnectedGraph, ValueError) as exc:
        raise ParseError(str(exc)) from exc


_DSL_EDGE = re.compile(r"^(?:(\w+):)?v?(\d+)-v?(\d+)$")


def graph_from_dsl(text):
    """Parse the one-line format "v0-v1 v0-v1 v0-v1".

    Each token is [label:]vA-vB; the "v" prefixes are optional.  Labels
    are cosmetic and ignored for edge identity (ids are positional).
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty graph description")
    edges = []
    for tok in tokens:
        m = _DSL_EDGE.match(tok)
        if not m:
            raise ParseError(f"bad edge token {tok!r} (expected e.g. v0-v1)")
        edges.append((int(m.group(2)), int(m.group(3))))
    try:
        return build_graph(edges)
    except (EmptyGraph, DisconnectedGraph) as exc:
        raise ParseError(str(exc)) from exc


def graph_to_json(graph):
    """Canonical byte-stable serialization (inverse of graph_from_json for
    graphs built by build_graph)."""
    vmap = {v: i for i, v in enumerate(graph.vertices)}
    payload = {
        "vertices": graph.n_vertices,
        "edges": [[vmap[graph.head[e]], vmap[graph.tail[e]]]
                  for e in sorted(graph.eids, key=str)],
        "order": [graph.pos(e) for e in sorted(graph.eids, key=str)],
    }
    # edge ids from build_graph are 0..m-1; keep that common case literal
    eids = sorted(graph.eids, key=str)
    if eids == list(range(graph.n_edges)):
        payload["edges"] = [[vmap[graph.head[e]], vmap[graph.tail[e]]] for e in range(graph.n_edges)]
        payload["order"] = [graph.pos(e) for e in range(graph.n_edges)]
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# matroid queries

def _guard(graph, what):
    if graph.n_edges > MAX_ENUM_EDGES:
        raise ResourceGuard(
            f"{what} enumerates subsets of {graph.n_edges} edges "
            f"(limit {MAX_ENUM_EDGES}; set CKS_KIT_MAX_ENUM_EDGES to raise)")


def is_independent(graph, edges):
    """No cycle inside `edges` (forest test)."""
    edges = list(edges)
    verts = set()
    for e in edges:
        verts.add(graph.head[e])
        verts.add(graph.tail[e])
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        a, b = find(graph.head[e]), find(graph.tail[e])
        if a == b:
            return False
        parent[a] = b
    return True


def enumerate_cycles(graph):
    """All circuits: connected subgraphs in which every vertex has degree 2."""
    _guard(graph, "cycle enumeration")
    out = []
    edges = graph.sort_edges(graph.eids)
    for r in range(1, len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            if _is_circuit(graph, combo):
                out.append(frozenset(combo))
    return out


def _is_circuit(graph, edges):
    deg = {}
    for e in edges:
        if graph.is_loop(e):
            return len(edges) == 1
        deg[graph.head[e]] = deg.get(graph.head[e], 0) + 1
        deg[graph.tail[e]] = deg.get(graph.tail[e], 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    return _connected(deg.keys(), [(graph.head[e], graph.tail[e]) for e in edges])


def enumerate_bonds(graph):
    """All minimal edge cuts."""
    _guard(graph, "bond enumeration")
    edges = graph.sort_edges(graph.eids)
    cuts = []
    for r in range(1, len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            s = frozenset(combo)
            if _disconnects(graph, s) and not any(c < s for c in cuts):
                cuts.append(s)
    return cuts


def _disconnects(graph, edges):
    keep = [(graph.head[e], graph.tail[e]) for e in graph.order if e not in edges]
    return not _connected(graph.vertices, keep)


def contains_bond(graph, edges):
    """True iff the edge set contains a bond, i.e. its deletion disconnects."""
    return _disconnects(graph, frozenset(edges))


class FaceComplex:
    """Edge sets containing no bond, graded by cardinality.

    levels[k] lists the k-element faces in lexicographic order of the edge
    order; the top level (k = genus) is exactly the spanning cotrees.
    """

    def __init__(self, graph, levels):
        self.graph = graph
        self.levels = levels
        self.genus = len(levels) - 1
        self._members = frozenset(s for level in levels for s in level)

    def __contains__(self, edges):
        return frozenset(edges) in self._members

    def faces(self):
        for level in self.levels:
            yield from level

    def __len__(self):
        return len(self._members)

    @classmethod
    def from_faces(cls, graph, faces, genus=None):
        if genus is None:
            genus = max((len(s) for s in faces), default=0)
        levels = [[] for _ in range(genus + 1)]
        for s in faces:
            levels[len(s)].append(frozenset(s))
        for level in levels:
            level.sort(key=lambda s: tuple(sorted(graph.pos(e) for e in s)))
        return cls(graph, levels)


def face_complex(graph):
    """All edge sets containing no bond (so deletion keeps connectivity)."""
    _guard(graph, "face enumeration")
    d = graph.genus()
    edges = graph.sort_edges(graph.eids)
    levels = []
    for k in range(d + 1):
        level = [frozenset(c) for c in itertools.combinations(edges, k)
                 if not _disconnects(graph, frozenset(c))]
        levels.append(level)
    return FaceComplex(graph, levels)


def is_spanning_tree(graph, edges):
    edges = frozenset(edges)
    return (len(edges) == graph.n_vertices - 1
            and is_independent(graph, edges)
            and _connected(graph.vertices,
                           [(graph.head[e], graph.tail[e]) for e in edges]))


def is_spanning_cotree(graph, edges):
    edges = frozenset(edges)
    return (len(edges) == graph.genus()
            and not _disconnects(graph, edges))


def spanning_cotrees(graph):
    """Spanning cotrees in lexicographic order of the edge order."""
    _guard(graph, "cotree enumeration")
    d = graph.genus()
    edges = graph.sort_edges(graph.eids)
    return [frozenset(c) for c in itertools.combinations(edges, d)
            if not _disconnects(graph, frozenset(c))]


# ---------------------------------------------------------------------------
# homology coordinates

def boundary_matrix(graph):
    """Vertex-by-edge incidence matrix: edge e contributes +1 at its head
    and -1 at its tail (loops give zero columns)."""
    vidx = {v: i for i, v in enumerate(graph.vertices)}
    m = [[0] * graph.n_edges for _ in graph.vertices]
    for j, e in enumerate(graph.order):
        m[vidx[graph.head[e]]][j] += 1
        m[vidx[graph.tail[e]]][j] -= 1
    return m


def fundamental_cycle(graph, tree, x):
    """Cycle supported on tree ∪ {x}, signed so that x has coefficient +1.

    `tree` is a spanning tree edge set and x an edge outside it.  Returns a
    sparse dict edge -> coefficient in {-1, 0, 1}.
    """
    if graph.is_loop(x):
        return {x: 1}
    # walk the tree from head(x) back to tail(x)
    adj = {v: [] for v in graph.vertices}
    for e in tree:
        adj[graph.head[e]].append((e, graph.tail[e], -1))
        adj[graph.tail[e]].append((e, graph.head[e], +1))
    start, goal = graph.head[x], graph.tail[x]
    prev = {start: None}
    stack = [start]
    while stack and goal not in prev:
        v = stack.pop()
        for e, w, sgn in adj[v]:
            if w not in prev:
                prev[w] = (v, e, sgn)
                stack.append(w)
    if goal not in prev:
        raise NotASpanningTree("tree does not connect the endpoints")
    cyc = {x: 1}
    v = goal
    while prev[v] is not None:
        u, e, sgn = prev[v]
        cyc[e] = cyc.get(e, 0) + sgn
        v = u
    return {e: c for e, c in cyc.items() if c}


class CycleBasis:
    """Fundamental-cycle basis of graph homology for a spanning cotree.

    rows[x] is the sparse coordinate vector of the cycle attached to the
    cotree edge x; the submatrix on cotree columns is the identity.
    """

    def __init__(self, graph, cotree):
        if not is_spanning_cotree(graph, cotree):
            raise NotACotree(f"{sorted(map(str, cotree))} is not a spanning cotree")
        self.graph = graph
        self.cotree = tuple(graph.sort_edges(cotree))
        tree = frozenset(graph.eids) - frozenset(cotree)
        self.rows = {x: fundamental_cycle(graph, tree, x) for x in self.cotree}

    def cycle_matrix(self):
        cols = self.graph.order
        return [[self.rows[x].get(e, 0) for e in cols] for x in self.cotree]

    def pair(self, x, e):
        """Coefficient of edge e in the cycle attached to cotree edge x."""
        return self.rows[x].get(e, 0)

    def pairing(self, edges):
        cols = self.graph.sort_edges(edges)
        return [[self.rows[x].get(e, 0) for e in cols] for x in self.cotree]

    def coordinates(self, cycle):
        """H1-coordinates of a sparse cycle vector: read off cotree entries."""
        return {x: cycle.get(x, 0) for x in self.cotree if cycle.get(x, 0)}


def h1_basis(graph, cotree):
    return CycleBasis(graph, cotree)


def pairing(cycle_basis, edges):
    return cycle_basis.pairing(edges)


# ---------------------------------------------------------------------------
# genericity of characters

def is_generic_character(graph, theta):
    """Decide whether an integer edge vector avoids every non-generic
    incidence of the associated hyperplane arrangement.

    For each spanning cotree T*, the system <p, x> = theta_x (x in T*) has a
    unique solution p (the cotree systems are unimodular, so p is integral,
    asserted).  The character is generic iff no solution also satisfies
    <p, e> = theta_e for an edge e outside T*.  Returns (bool, violations)
    where violations lists (cotree, edge) witnesses.
    """
    if isinstance(theta, (list, tuple)):
        theta = {e: theta[i] for i, e in enumerate(graph.order)}
    d = graph.genus()
    if d == 0:
        return True, []
    cotrees = spanning_cotrees(graph)
    ref = CycleBasis(graph, cotrees[0])
    basis = list(ref.cotree)
    violations = []
    for ct in cotrees:
        cols = graph.sort_edges(ct)
        a = [[ref.rows[y].get(x, 0) for y in basis] for x in cols]
        b = [theta[x] for x in cols]
        p = dict(zip(basis, solve_exact(a, b)))
        assert all(c.denominator == 1 for c in p.values()), \
            "cotree system must be unimodular"
        for e in graph.sort_edges(graph.eids - frozenset(ct)):
            val = sum(p[y] * ref.rows[y].get(e, 0) for y in basis)
            if val == theta[e]:
                violations.append((frozenset(ct), e))
    return not violations, violations


# ---------------------------------------------------------------------------
# spanning tree count

def spanning_tree_count(graph):
    """Kirchhoff matrix-tree determinant (loops contribute nothing)."""
    n = graph.n_vertices
    if n == 1:
        return 1
    vidx = {v: i for i, v in enumerate(graph.vertices)}
    lap = [[0] * n for _ in range(n)]
    for e in graph.order:
        if graph.is_loop(e):
            continue
        a, b = vidx[graph.head[e]], vidx[graph.tail[e]]
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return abs(det(reduced))


def wedge(g1, g2):
    """One-point union: glue vertex 0 of each graph at a common vertex.

    Edge ids become ("a", e) / ("b", e); the edge order concatenates g1
    before g2.
    """
    def rename(g, tag):
        vmap = {v: (tag, v) for v in g.vertices}
        vmap[g.vertices[0]] = "base"
        return vmap

    v1, v2 = rename(g1, "a"), rename(g2, "b")
    verts = ["base"] + [v1[v] for v in g1.vertices if v1[v] != "base"] \
                     + [v2[v] for v in g2.vertices if v2[v] != "base"]
    heads, tails, order = {}, {}, []
    for e in g1.order:
        heads[("a", e)] = v1[g1.head[e]]
        tails[("a", e)] = v1[g1.tail[e]]
        order.append(("a", e))
    for e in g2.order:
        heads[("b", e)] = v2[g2.head[e]]
        tails[("b", e)] = v2[g2.tail[e]]
        order.append(("b", e))
    return Graph(verts, heads, tails, order)
