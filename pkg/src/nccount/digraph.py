"""Valued directed graphs on derived points and on noncommutative curves.

Vertices are subcategories; there is an edge (a, b) whenever all homs from b
to a vanish, so edges are exactly the semi-orthogonal pairs.  A one-sided
edge carries the total hom dimension in the forward direction as its weight;
double-sided edges (mutually orthogonal vertices) carry none.  Point graphs
exist for the A-type and D_4 categories, for finite windows of the two
affine quivers, and for the two-object categories of every genus l >= -1;
curve graphs for D_4 and windows of the square quiver.
"""

import json
import re
from itertools import combinations, permutations

from . import affine, d4, typea


class ValuedDigraph:
    """Finite directed graph with optional weights on one-sided edges."""

    def __init__(self, category, vertices, genus=None, boundary=()):
        self.category = category
        self.vertices = list(vertices)
        self.genus = dict(genus or {})
        self.boundary = set(boundary)  # window-truncated vertices, in-memory only
        self._edges = {}

    def add_edge(self, src, dst, weight=None):
        if src == dst:
            raise ValueError("self-loops are excluded")
        self._edges[(src, dst)] = weight

    def finalize(self):
        """Drop weights from double-sided edges; sort vertices."""
        for s, t in list(self._edges):
            if (t, s) in self._edges:
                self._edges[(s, t)] = None
        self.vertices.sort()
        return self

    def has_edge(self, src, dst):
        return (src, dst) in self._edges

    def weight(self, src, dst):
        return self._edges[(src, dst)]

    def one_sided_edges(self):
        return sorted(e for e in self._edges if (e[1], e[0]) not in self._edges)

    def double_sided_pairs(self):
        return sorted(
            {tuple(sorted(e)) for e in self._edges if (e[1], e[0]) in self._edges}
        )

    def census(self):
        """(vertices, one-sided edges, double-sided edges counted once)."""
        return (
            len(self.vertices),
            len(self.one_sided_edges()),
            len(self.double_sided_pairs()),
        )

    def out_degree(self, v):
        return sum(1 for s, _ in self._edges if s == v)

    def in_degree(self, v):
        return sum(1 for _, t in self._edges if t == v)

    def successors(self, v):
        return sorted(t for s, t in self._edges if s == v)

    def undirected_components(self):
        adj = {v: set() for v in self.vertices}
        for s, t in self._edges:
            adj[s].add(t)
            adj[t].add(s)
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = {v}, [v]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(sorted(comp))
        return comps

    def induced(self, vertex_subset):
        """Edge dict restricted to a vertex subset."""
        vs = set(vertex_subset)
        return {
            e: w for e, w in self._edges.items() if e[0] in vs and e[1] in vs
        }

    def rename_category(self, category):
        self.category = category
        return self


# --- construction ------------------------------------------------------------


def _add_pairwise_edges(g, objs, is_pair, hom_value):
    """Edges from a pair classifier: edge (x, y) iff (x, y) is exceptional;
    weight = total forward hom, dropped later on double-sided edges."""
    ids = {id(o): str(o) for o in objs}
    for x, y in permutations(objs, 2):
        if is_pair(x, y):
            g.add_edge(ids[id(x)], ids[id(y)], hom_value(x, y))
    return g.finalize()


def _parse_category(category):
    m = re.fullmatch(r"a(\d+)", category)
    if m:
        return ("a", int(m.group(1)))
    m = re.fullmatch(r"np(-?\d+)", category)
    if m:
        return ("np", int(m.group(1)))
    if category in ("d4", "q1", "q2"):
        return (category, None)
    raise ValueError(f"unknown category {category!r}")


def _window_pair(window):
    if window is None:
        raise ValueError("this category needs a finite window=(lo, hi)")
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    return lo, hi


def build_point_graph(category: str, window=None) -> ValuedDigraph:
    """Graph of derived points for 'aN', 'd4', 'q1'/'q2' (windowed) or
    'npL' (the genus-L two-generator category; windowed for L >= 1)."""
    kind, param = _parse_category(category)
    if kind == "a":
        n = param - 1
        if param < 1:
            raise ValueError("need at least one vertex")
        pts = typea.enum_points(n)
        g = ValuedDigraph(category, [str(p) for p in pts], {str(p): None for p in pts})
        return _add_pairwise_edges(
            g,
            pts,
            lambda x, y: typea.interval_pair_is_exceptional(x, y, n),
            lambda x, y: typea.interval_total_hom(x, y, n),
        )
    if kind == "d4":
        objs = d4.LABELS
        g = ValuedDigraph(category, list(objs), {o: None for o in objs})
        for x, y in permutations(objs, 2):
            if d4.d4_pair_class(x, y) is not d4.PairClass.NOT_EXCEPTIONAL:
                g.add_edge(x, y, d4.total_hom(x, y))
        return g.finalize()
    if kind in ("q1", "q2"):
        lo, hi = _window_pair(window)
        objs = [
            affine.obj(kind, fam, m)
            for fam in affine.SERIES[kind]
            for m in range(lo, hi + 1)
        ]
        objs += [affine.obj(kind, fam) for fam in affine.SPORADIC[kind]]
        boundary = [str(o) for o in objs if o.index in (lo, hi)]
        g = ValuedDigraph(
            category, [str(o) for o in objs], {str(o): None for o in objs}, boundary
        )
        return _add_pairwise_edges(
            g,
            objs,
            lambda x, y: affine.aff_pair_class(x, y)
            is not affine.AffPairClass.NOT_EXCEPTIONAL,
            affine.pair_total_hom,
        )
    # np: the category generated by a strong pair with l+1 connecting homs
    l = param
    if l < -1:
        raise ValueError("genus must be >= -1")
    if l == -1:
        g = ValuedDigraph(category, ["E1", "E2"], {"E1": None, "E2": None})
        g.add_edge("E1", "E2")
        g.add_edge("E2", "E1")
        return g.finalize()
    if l == 0:
        return build_point_graph("a2").rename_category(category)
    lo, hi = _window_pair(window)
    ids = [f"s{i}" for i in range(lo, hi + 1)]
    g = ValuedDigraph(category, ids, {i: None for i in ids}, {ids[0], ids[-1]})
    for i in range(lo, hi):
        g.add_edge(f"s{i}", f"s{i + 1}", l + 1)
    return g.finalize()


def _d4_curve_vertices():
    """(id, genus, generator labels) for all 24 D_4 curves."""
    out = []
    for curve in d4.genus0_curves():
        gens = d4.curve_presentations(curve)[0]
        out.append(("<" + ",".join(gens) + ">", 0, tuple(sorted(curve))))
    for curve in d4.genus_minus1_curves():
        gens = tuple(sorted(curve))
        out.append(("<" + ",".join(gens) + ">", -1, gens))
    return out


def build_curve_graph(category: str, window=None) -> ValuedDigraph:
    """Semi-orthogonality graph on noncommutative curves: genus 0 and -1
    for 'd4'; genus 1, 0 and -1 on a window for 'q2'."""
    if category == "d4":
        verts = _d4_curve_vertices()
        g = ValuedDigraph(
            "d4-curves", [v for v, _, _ in verts], {v: gen for v, gen, _ in verts}
        )
        for (va, _, gens_a), (vb, _, gens_b) in permutations(verts, 2):
            if all(d4.total_hom(x, y) == 0 for x in gens_b for y in gens_a):
                g.add_edge(va, vb)
        return g.finalize()
    if category == "q2":
        lo, hi = _window_pair(window)
        subs = []
        for genus in (1, 0, -1):
            subs.extend(affine.aff_enum_curves("q2", genus, (lo, hi)))
        genus_of = {
            str(s): {"genus1": 1, "genus0": 0, "genus-1": -1}[s.kind] for s in subs
        }
        boundary = {str(s) for s in subs if s.index in (lo, hi)}
        g = ValuedDigraph(
            "q2-curves", [str(s) for s in subs], genus_of, boundary
        )
        for sa, sb in permutations(subs, 2):
            if all(
                affine.hom_vanishes(x, y)
                for x in sb.generators()
                for y in sa.generators()
            ):
                g.add_edge(str(sa), str(sb))
        return g.finalize()
    raise ValueError(f"no curve graph for {category!r}")


# --- simplicial complex -------------------------------------------------------


def is_simplex(g: ValuedDigraph, subset) -> bool:
    """True iff some ordering of the subset is a semi-orthogonal chain."""
    subset = list(subset)
    if len(set(subset)) != len(subset):
        raise ValueError("repeated vertices")
    # every pair must be joined in at least one direction
    if not all(
        g.has_edge(a, b) or g.has_edge(b, a) for a, b in combinations(subset, 2)
    ):
        return False
    return any(
        all(g.has_edge(p[i], p[j]) for i in range(len(p)) for j in range(i + 1, len(p)))
        for p in permutations(subset)
    )


def sc_simplices(g: ValuedDigraph, max_dim: int) -> list:
    """All simplices of dimension <= max_dim (vertex sets of size <=
    max_dim + 1 admitting a semi-orthogonal ordering), as sorted tuples."""
    if max_dim < 0:
        raise ValueError("need max_dim >= 0")
    out = [(v,) for v in g.vertices]
    for size in range(2, max_dim + 2):
        for sub in combinations(g.vertices, size):
            if is_simplex(g, sub):
                out.append(sub)
    return out


# --- exporters ----------------------------------------------------------------


def _dot_quote(s):
    return '"' + s.replace('"', '\\"') + '"'


def export(g: ValuedDigraph, format: str = "json") -> str:
    """Serialize a graph: DOT for rendering tools, JSON per the documented
    schema.  Output is byte-deterministic for a fixed graph."""
    if format == "dot":
        lines = ["digraph G {"]
        for v in g.vertices:
            lines.append(f"  {_dot_quote(v)};")
        for s, t in g.one_sided_edges():
            w = g.weight(s, t)
            label = f" [label={w}]" if w is not None else ""
            lines.append(f"  {_dot_quote(s)} -> {_dot_quote(t)}{label};")
        for s, t in g.double_sided_pairs():
            lines.append(f"  {_dot_quote(s)} -> {_dot_quote(t)} [dir=both];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        edges = [
            {"src": s, "dst": t, "weight": g.weight(s, t), "both": False}
            for s, t in g.one_sided_edges()
        ]
        edges += [
            {"src": s, "dst": t, "weight": None, "both": True}
            for s, t in g.double_sided_pairs()
        ]
        doc = {
            "category": g.category,
            "vertices": [
                {"id": v, "genus": g.genus.get(v)} for v in g.vertices
            ],
            "edges": sorted(edges, key=lambda e: (e["src"], e["dst"])),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {format!r}")


def from_json(text: str) -> ValuedDigraph:
    """Rebuild a graph from its JSON export."""
    doc = json.loads(text)
    g = ValuedDigraph(
        doc["category"],
        [v["id"] for v in doc["vertices"]],
        {v["id"]: v["genus"] for v in doc["vertices"]},
    )
    for e in doc["edges"]:
        g.add_edge(e["src"], e["dst"], e["weight"])
        if e["both"]:
            g.add_edge(e["dst"], e["src"], e["weight"])
    return g.finalize()


def isomorphic_as_labeled(g1: ValuedDigraph, g2: ValuedDigraph) -> bool:
    """Equality of vertex sets, edges and weights (identity relabeling)."""
    return (
        sorted(g1.vertices) == sorted(g2.vertices)
        and g1.induced(g1.vertices) == g2.induced(g2.vertices)
    )


# --- pattern census on the square quiver ---------------------------------------


def q1_pattern_subgraphs(window) -> list:
    """Vertex sets of subgraphs of the windowed q2 point graph isomorphic to
    the q1 point graph on the same window: pairs of series plus two sporadic
    objects reproducing the q1 edge-and-weight pattern exactly."""
    lo, hi = _window_pair(window)
    g2 = build_point_graph("q2", window)
    reference = build_point_graph("q1", window)
    found = set()
    for x, y in permutations(affine.SERIES["q2"], 2):
        for p, q in permutations(affine.SPORADIC["q2"], 2):
            relabel = {"M": p, "M'": q}
            relabel.update({f"a^{i}": f"{x}^{i}" for i in range(lo, hi + 1)})
            relabel.update({f"b^{i}": f"{y}^{i}" for i in range(lo, hi + 1)})
            image_edges = {
                (relabel[s], relabel[t]): w
                for (s, t), w in reference.induced(reference.vertices).items()
            }
            candidate = g2.induced(relabel.values())
            if candidate == image_edges:
                found.add(frozenset((x, y, p, q)))
    return sorted(sorted(v) for v in found)
