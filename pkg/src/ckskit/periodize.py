"""Finite-level periodization: each edge becomes a chain of 2n+1 segments.

An edge e of the base graph turns into segments (e, -n), ..., (e, n)
strung through fresh interior vertices (i, e); segment (e, n) keeps the
original head and (e, -n) the original tail.  Any two distinct segments of
one base edge form a bond, so the faces of the periodized graph are
exactly the S_I: one segment (e, I(e)) per base edge e of a base face S.
The periodized coherent cotree puts every chosen cotree edge in its middle
segment: C(S_I) = {(x, 0) : x in C(S)}.
"""

import itertools

from .activity import CoherentCotree
from .errors import EdgeIsBondOrLoop
from .graphs import FaceComplex, Graph, contains_bond, face_complex


class PeriodizedGraph:
    """The level-n periodization together with its labeling maps."""

    def __init__(self, base, n):
        if n < 0:
            raise ValueError("level must be >= 0")
        self.base = base
        self.n = n
        verts = list(base.vertices) + [
            (i, e) for e in base.order for i in range(-n, n)
        ]
        heads, tails, order = {}, {}, []
        for e in base.sort_edges(base.eids):
            for i in range(-n, n + 1):
                seg = (e, i)
                heads[seg] = base.head[e] if i == n else (i, e)
                tails[seg] = base.tail[e] if i == -n else (i - 1, e)
                order.append(seg)
        self.graph = Graph(verts, heads, tails, order)

    def lift_face(self, s, index):
        """S_I for a base face s and an index map e -> i."""
        return frozenset((e, index[e]) for e in s)

    def face_indices(self, s):
        """All index maps for a base face, in lexicographic order."""
        members = self.base.sort_edges(s)
        for combo in itertools.product(range(-self.n, self.n + 1),
                                       repeat=len(members)):
            yield dict(zip(members, combo))


def periodize_graph(base, n):
    return PeriodizedGraph(base, n)


def periodized_faces(pg, base_faces):
    """Face complex of the periodized graph by the product description."""
    faces = []
    for s in base_faces.faces():
        for index in pg.face_indices(s):
            faces.append(pg.lift_face(s, index))
    return FaceComplex.from_faces(pg.graph, faces, genus=base_faces.genus)


def periodized_cotree(cc, n):
    """Coherent cotree on the level-n periodization: C(S_I) = C(S) placed
    on the middle segments."""
    pg = PeriodizedGraph(cc.graph, n)
    faces = periodized_faces(pg, cc.faces)
    table = {}
    for s in cc.faces.faces():
        cot = frozenset((x, 0) for x in cc.C(s))
        for index in pg.face_indices(s):
            table[pg.lift_face(s, index)] = cot
    return pg, CoherentCotree(pg.graph, faces, table)


def in_by_formula(cc, pg, s, index):
    """In(S_I) predicted from base data: middle segments of base edges
    that are in In(S) and carry index 0."""
    base_in = cc.in_set(s)
    return frozenset((e, 0) for e in base_in if index[e] == 0)


def basis_by_formula(cc, pg):
    """B of the periodized graph predicted from base data: S_I is a basis
    face iff In(S) is contained in the support of I."""
    out = []
    for s in cc.faces.faces():
        base_in = cc.in_set(s)
        for index in pg.face_indices(s):
            if all(index[e] != 0 for e in base_in):
                out.append(pg.lift_face(s, index))
    return out


def check_in_lemma(cc, n):
    """Compare the formula for In on the periodization against the direct
    definition on the periodized coherent cotree.  Returns (ok, witness)."""
    pg, pcc = periodized_cotree(cc, n)
    for s in cc.faces.faces():
        for index in pg.face_indices(s):
            lifted = pg.lift_face(s, index)
            direct = pcc.in_set(lifted)
            predicted = in_by_formula(cc, pg, s, index)
            if direct != predicted:
                return False, (s, dict(index), direct, predicted)
    return True, None


def check_basis_formula(cc, n):
    pg, pcc = periodized_cotree(cc, n)
    direct = set(pcc.basis())
    predicted = set(basis_by_formula(cc, pg))
    return direct == predicted, (direct, predicted)


def check_contraction_compatibility(cc, n):
    """The collapse from level n+1 to level n (contracting the outermost
    segments) restricts to a bijection of basis faces with inner support."""
    pg1 = PeriodizedGraph(cc.graph, n + 1)
    pg0 = PeriodizedGraph(cc.graph, n)
    b1 = basis_by_formula(cc, pg1)
    b0 = set(basis_by_formula(cc, pg0))
    inner = [s for s in b1
             if all(abs(i) <= n for (_, i) in s)]
    image = {frozenset(seg for seg in s) for s in inner}
    return image == b0, (len(inner), len(b0))


class DelConPeriodized:
    """Level-n deletion-contraction report for a non-loop non-bridge edge.

    Builds compatible coherent cotrees (edge ordered last, induced tables
    on the deleted/contracted sides), periodizes all three, and exposes
    the dimension identity and the set-theoretic basis partition.
    """

    def __init__(self, graph, e, n):
        from .ht import induced_contraction_cotree, induced_deletion_cotree
        from .activity import coherent_cotree
        if graph.is_loop(e) or contains_bond(graph, {e}):
            raise EdgeIsBondOrLoop(f"edge {e!r} is a loop or a bridge")
        self.edge = e
        self.n = n
        order = [x for x in graph.order if x != e] + [e]
        self.graph = Graph(graph.vertices, graph.head, graph.tail, order)
        self.cc = coherent_cotree(self.graph)
        self.cc_del = induced_deletion_cotree(self.cc, e)
        self.cc_con = induced_contraction_cotree(self.cc, e)
        self.pg_mid = PeriodizedGraph(self.graph, n)
        self.pg_del = PeriodizedGraph(self.cc_del.graph, n)
        self.pg_con = PeriodizedGraph(self.cc_con.graph, n)

    def graded_counts(self, cc, pg):
        d = cc.faces.genus
        counts = [0] * (d + 1)
        for s in basis_by_formula(cc, pg):
            counts[len(s)] += 1
        return counts

    def dimension_identity(self):
        """dim R^{2k}(mid_n) = (2n+1) dim R^{2k-2}(del_n) + dim R^{2k}(con_n)."""
        mid = self.graded_counts(self.cc, self.pg_mid)
        dl = self.graded_counts(self.cc_del, self.pg_del)
        cn = self.graded_counts(self.cc_con, self.pg_con)
        top = max(len(mid), len(dl) + 1, len(cn))

        def get(v, k):
            return v[k] if 0 <= k < len(v) else 0

        ok = all(
            get(mid, k) == (2 * self.n + 1) * get(dl, k - 1) + get(cn, k)
            for k in range(top)
        )
        return ok, {"middle": mid, "deleted": dl, "contracted": cn}

    def basis_partition(self):
        """B(mid_n) = {S_I ∪ (e,i)} over B(del_n) and all i, ⊔ B(con_n)."""
        mid = set(basis_by_formula(self.cc, self.pg_mid))
        dl = basis_by_formula(self.cc_del, self.pg_del)
        cn = basis_by_formula(self.cc_con, self.pg_con)
        from_del = {
            s | {(self.edge, i)}
            for s in dl for i in range(-self.n, self.n + 1)
        }
        from_con = set(cn)
        ok = (from_del.isdisjoint(from_con)
              and from_del | from_con == mid
              and len(from_del) + len(from_con) == len(mid))
        return ok, (len(from_del), len(from_con), len(mid))


def delcon_r_periodized(graph, e, n):
    """Dimension report for the level-n deletion-contraction sequence."""
    dc = DelConPeriodized(graph, e, n)
    ok_dim, dims = dc.dimension_identity()
    ok_part, sizes = dc.basis_partition()
    return {
        "edge": dc.edge,
        "level": n,
        "dimension_identity": ok_dim,
        "dims": dims,
        "basis_partition": ok_part,
        "partition_sizes": sizes,
    }


def native_face_check(cc, n, max_edges=12):
    """Cross-check the product description of the periodized faces against
    exhaustive enumeration, when the periodized graph is small enough."""
    pg = PeriodizedGraph(cc.graph, n)
    if pg.graph.n_edges > max_edges:
        return None
    direct = {frozenset(s) for s in face_complex(pg.graph).faces()}
    predicted = {frozenset(s) for s in periodized_faces(pg, cc.faces).faces()}
    return direct == predicted
