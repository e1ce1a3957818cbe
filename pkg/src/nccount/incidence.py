"""Derived points of genus-0 curves, pairwise curve intersections, greatest
lower bounds, and the point/line incidence structures of the A_3 and D_4
categories.

Only the abstract incidence data is modelled; the planar drawings that
realize these structures are not.
"""

import json
from typing import NamedTuple

from . import d4, typea
from .typea import GenSetA, Interval


def _interval_from_dim(vec) -> Interval | None:
    ones = [i for i, x in enumerate(vec) if x == 1]
    if not ones or any(x not in (0, 1) for x in vec):
        return None
    if ones != list(range(ones[0], ones[-1] + 1)):
        return None
    return Interval(ones[0], ones[-1])


def derived_points_a(curve: GenSetA, n: int) -> frozenset:
    """The three derived points of a genus-0 curve in the (n+1)-vertex
    A-type category, given by any spanning pair of interval objects."""
    if len(curve.generators) != 2:
        raise ValueError(f"{curve} is not given by a pair of generators")
    x, y = curve.generators
    fwd = typea.interval_pair_is_exceptional(x, y, n)
    bwd = typea.interval_pair_is_exceptional(y, x, n)
    if not (fwd or bwd) or typea.interval_total_hom(x, y, n) + typea.interval_total_hom(
        y, x, n
    ) != 1:
        raise ValueError(f"{curve} is not a genus-0 curve")
    dx, dy = typea.interval_dim(x, n), typea.interval_dim(y, n)
    for cand in (
        tuple(a + b for a, b in zip(dx, dy)),
        tuple(abs(a - b) for a, b in zip(dx, dy)),
    ):
        third = _interval_from_dim(cand)
        if third is not None:
            return frozenset((x, y, third))
    raise AssertionError(f"no third point below {curve}")


def derived_points(curve, category: str) -> frozenset:
    """Derived points of a genus-0 curve; category 'aN' or 'd4'."""
    if category == "d4":
        gens = curve.generators if isinstance(curve, d4.GenSet) else tuple(curve)
        if len(gens) != 2:
            raise ValueError(f"{curve} is not given by a pair of generators")
        a, b = gens
        return frozenset((a, b, d4.third_point(a, b)))
    if category.startswith("a"):
        n = int(category[1:]) - 1
        return derived_points_a(curve, n)
    raise ValueError(f"unknown category {category!r}")


def _curve_point_set(curve, category: str):
    """(genus, derived-point set) of a curve of genus 0 or -1.

    A genus -1 curve (orthogonal pair) contains exactly its two generators
    as derived points; a genus-0 curve contains three.
    """
    if category == "d4":
        gens = curve.generators if isinstance(curve, d4.GenSet) else tuple(curve)
        if len(gens) == 2 and d4.d4_pair_class(*gens) is d4.PairClass.ORTHOGONAL:
            return -1, frozenset(gens)
        return 0, derived_points(curve, category)
    if category.startswith("a"):
        n = int(category[1:]) - 1
        x, y = curve.generators
        if (
            typea.interval_total_hom(x, y, n) == 0
            and typea.interval_total_hom(y, x, n) == 0
        ):
            return -1, frozenset((x, y))
        return 0, derived_points_a(curve, n)
    raise ValueError(f"unknown category {category!r}")


class Intersection(NamedTuple):
    kind: str  # 'equal', 'point' or 'empty'
    point: object = None


def intersect_curves(c1, c2, category: str) -> Intersection:
    """Intersection of two curves of genus 0 or -1: themselves, a single
    shared derived point, or nothing."""
    (_, t1), (_, t2) = _curve_point_set(c1, category), _curve_point_set(c2, category)
    if t1 == t2:
        return Intersection("equal")
    common = t1 & t2
    if not common:
        return Intersection("empty")
    if len(common) == 1:
        return Intersection("point", next(iter(common)))
    raise AssertionError(f"distinct curves sharing two points: {c1}, {c2}")


TRIVIAL = ("trivial", None)


def glb(x, y, category: str, include_orthogonal_pairs: bool = False):
    """Greatest lower bound in the poset of subcategories of the family
    {trivial, point, genus-0 curve}, optionally extended by the genus -1
    curves (orthogonal pairs of points).

    Elements are tagged pairs ('trivial', None), ('point', p) or
    ('curve', c); the result is another such pair.
    """
    for item in (x, y):
        if not (isinstance(item, tuple) and len(item) == 2
                and item[0] in ("trivial", "point", "curve")):
            raise ValueError(f"{item!r} is outside the supported family")
        if item[0] == "curve" and not include_orthogonal_pairs:
            genus, _ = _curve_point_set(item[1], category)
            if genus == -1:
                raise ValueError(
                    f"{item[1]} has genus -1; pass include_orthogonal_pairs=True"
                )
    if x == TRIVIAL or y == TRIVIAL:
        return TRIVIAL
    (kx, px), (ky, py) = x, y
    if kx == "point" and ky == "point":
        return x if px == py else TRIVIAL
    if kx == "curve" and ky == "curve":
        hit = intersect_curves(px, py, category)
        if hit.kind == "equal":
            return x
        if hit.kind == "point":
            return ("point", hit.point)
        return TRIVIAL
    # mixed point / curve
    point, curve = (px, py) if kx == "point" else (py, px)
    if point in _curve_point_set(curve, category)[1]:
        return ("point", point)
    return TRIVIAL


class IncidenceStructure(NamedTuple):
    points: tuple  # point labels
    lines: tuple  # (line id, tuple of point labels)

    def incidences(self):
        return [(p, lid) for lid, pts in self.lines for p in pts]

    def degree(self, point):
        return sum(1 for lid, pts in self.lines if point in pts)


def _a3_lines():
    out = []
    for seq in typea.enum_seqs(2, 2):
        curve = typea.seq_to_subcategory(seq)
        out.append(tuple(sorted(str(p) for p in derived_points_a(curve, 2))))
    return out


def _d4_lines():
    return [tuple(sorted(c)) for c in d4.genus0_curves()]


def incidence_structure(category: str) -> IncidenceStructure:
    """Point/line incidence of the genus-0 curves: 6 points and 4 lines for
    'a3', 12 points and 15 lines for 'd4'."""
    if category == "a3":
        points = tuple(sorted(str(p) for p in typea.enum_points(2)))
        triples = _a3_lines()
    elif category == "d4":
        points = d4.LABELS
        triples = _d4_lines()
    else:
        raise ValueError(f"unknown category {category!r}")
    lines = tuple(
        (";".join(t), t) for t in sorted(triples)
    )
    return IncidenceStructure(points, lines)


def export_incidence(struct: IncidenceStructure) -> str:
    doc = {
        "points": list(struct.points),
        "lines": [{"id": lid, "points": list(pts)} for lid, pts in struct.lines],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
