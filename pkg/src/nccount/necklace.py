"""Rotation classes of vertex subsets of a regular polygon.

This is the independent geometric oracle for the Serre-orbit counts: the
s-subsets of Z/m up to rotation are counted both by a Burnside divisor sum
and by explicit canonical-form enumeration, and the two must agree.
Reflections are never quotiented out.
"""

from functools import lru_cache
from math import comb, gcd
from typing import NamedTuple

import numpy as np

from .arith import divisors, euler_phi
from .typea import MonotoneSeq


class Subgon(NamedTuple):
    """A subset of the vertices 0..m-1 of a regular m-gon."""

    m: int
    vertices: tuple  # sorted residues

    def rotate(self, t: int) -> "Subgon":
        return Subgon(self.m, tuple(sorted((v + t) % self.m for v in self.vertices)))

    def canonical(self) -> "Subgon":
        """Lexicographically minimal rotation."""
        best = min(self.rotate(t).vertices for t in range(self.m))
        return Subgon(self.m, best)


def subgon(m: int, vertices) -> Subgon:
    verts = tuple(sorted(int(v) % m for v in vertices))
    if m < 1 or not verts:
        raise ValueError("need m >= 1 and a non-empty vertex set")
    if len(set(verts)) != len(verts):
        raise ValueError(f"repeated residues in {vertices}")
    return Subgon(m, verts)


def count_subgon_classes_burnside(m: int, s: int) -> int:
    """(1/m) * sum over d | gcd(m,s) of phi(d) * C(m/d, s/d)."""
    if not 1 <= s <= m:
        raise ValueError(f"need 1 <= s <= m, got s={s}, m={m}")
    total = sum(euler_phi(d) * comb(m // d, s // d) for d in divisors(gcd(m, s)))
    assert total % m == 0
    return total // m


@lru_cache(maxsize=8)
def _brute_counts(m: int) -> tuple:
    """Rotation-class counts for every subset size 0..m, by canonicalizing
    all 2^m bitmask subsets (vectorized; m <= 24 stays cheap)."""
    if m > 24:
        raise ValueError("brute-force enumeration is capped at m = 24")
    masks = np.arange(1 << m, dtype=np.uint32)
    full = np.uint32((1 << m) - 1)
    canon = masks.copy()
    for r in range(1, m):
        rot = ((masks >> np.uint32(r)) | (masks << np.uint32(m - r))) & full
        np.minimum(canon, rot, out=canon)
    classes = np.unique(canon)
    counts = [0] * (m + 1)
    for c in classes.tolist():
        counts[c.bit_count()] += 1
    return tuple(counts)


def count_subgon_classes_brute(m: int, s: int) -> int:
    """Rotation classes of s-subsets by canonical-form enumeration."""
    if not 1 <= s <= m:
        raise ValueError(f"need 1 <= s <= m, got s={s}, m={m}")
    return _brute_counts(m)[s]


def count_subgon_classes(m: int, s: int) -> int:
    """Number of s-subgons of a regular m-gon up to rotation.

    Computed independently by Burnside's lemma and by canonical-form brute
    force; a disagreement raises.
    """
    burnside = count_subgon_classes_burnside(m, s)
    brute = count_subgon_classes_brute(m, s)
    if burnside != brute:
        raise AssertionError(
            f"oracle mismatch for (m={m}, s={s}): burnside={burnside}, brute={brute}"
        )
    return burnside


def seq_to_subgon(seq: MonotoneSeq) -> Subgon:
    """Bijection X_n^k -> (k+1)-subgons of the (n+2)-gon: a_t -> a_t + t.

    Conjugates the Serre step on sequences to rotation by one.
    """
    m = seq.n + 2
    return subgon(m, ((v + t) % m for t, v in enumerate(seq.values)))
