"""Subcategory calculus for the derived category of an A-type quiver.

Public counting functions are phrased in N = number of quiver vertices, so
they concern D^b(A_N).  The combinatorial engine uses the internal parameter
n = N - 1 throughout: its ambient category has n+1 vertices, its exceptional
objects are the intervals s_{i,j} with 0 <= i <= j <= n, and the
A_{k+1}-type subcategories are parametrized by weakly increasing integer
sequences of length k+1 bounded by delta = n+1-k.

The generator of all group actions here is the Serre functor; its orbit
counts coincide with counts modulo the entire autoequivalence group.
"""

from fractions import Fraction
from math import comb, gcd
from typing import NamedTuple

from .arith import divisors, mobius
from .quiver import euler_form, line_quiver


class Interval(NamedTuple):
    """The indecomposable representation s_{i,j} supported on [i, j]."""

    i: int
    j: int

    def __str__(self):
        return f"s{self.i},{self.j}"


class MonotoneSeq(NamedTuple):
    """Element of X_n^k: 0 <= a_0 <= ... <= a_k <= n+1-k."""

    n: int
    k: int
    values: tuple

    @property
    def bound(self) -> int:
        """delta = n+1-k, the common upper bound of the entries."""
        return self.n + 1 - self.k


class GenSetA(NamedTuple):
    """Normalized generator list of an A-type subcategory."""

    generators: tuple

    def __str__(self):
        return "<" + ",".join(str(g) for g in self.generators) + ">"


def monotone_seq(n: int, k: int, values) -> MonotoneSeq:
    vals = tuple(int(v) for v in values)
    if k < 1 or len(vals) != k + 1:
        raise ValueError(f"need k >= 1 and k+1 values, got k={k}, {vals}")
    bound = n + 1 - k
    if bound < 0:
        raise ValueError(f"no sequences exist for k={k}, n={n}")
    if any(vals[t] > vals[t + 1] for t in range(k)):
        raise ValueError(f"values not weakly increasing: {vals}")
    if vals[0] < 0 or vals[-1] > bound:
        raise ValueError(f"values outside [0, {bound}]: {vals}")
    return MonotoneSeq(n, k, vals)


def interval_dim(iv: Interval, n: int) -> tuple:
    """Dimension vector of s_{i,j} over the vertices 0..n."""
    if not 0 <= iv.i <= iv.j <= n:
        raise ValueError(f"interval {iv} outside 0..{n}")
    return tuple(1 if iv.i <= v <= iv.j else 0 for v in range(n + 1))


def enum_points(n: int) -> list:
    """All interval objects of the ambient category, (n+1)(n+2)/2 of them."""
    if n < 0:
        raise ValueError("need n >= 0")
    return [Interval(i, j) for i in range(n + 1) for j in range(i, n + 1)]


def enum_seqs(n: int, k: int) -> list:
    """The set X_n^k in lexicographic order; C(n+2, k+1) elements."""
    bound = n + 1 - k
    if bound < 0:
        return []
    out = []

    def extend(prefix):
        if len(prefix) == k + 1:
            out.append(MonotoneSeq(n, k, tuple(prefix)))
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, bound + 1):
            extend(prefix + [v])

    extend([])
    return out


def seq_to_subcategory(seq: MonotoneSeq) -> GenSetA:
    """Staircase generator list of the subcategory encoded by seq.

    Generator t (0-based, t = 0..k-1) is the interval
    s_{a_t + t, a_{t+1} + t}; the assignment is injective on X_n^k.
    """
    a = seq.values
    gens = tuple(Interval(a[t] + t, a[t + 1] + t) for t in range(seq.k))
    return GenSetA(gens)


def count_id(k: int, vertices: int) -> int:
    """Number of A_k-type subcategories of D^b(A_N), N = vertices.

    Equals C(N+1, k+1); zero when k > N, one when k = N.
    """
    if k < 1 or vertices < 1:
        raise ValueError("need k >= 1 and vertices >= 1")
    return comb(vertices + 1, k + 1)


def serre_step(seq: MonotoneSeq) -> MonotoneSeq:
    """One application of the Serre functor on X_n^k."""
    a = seq.values
    if a[-1] < seq.bound:
        return MonotoneSeq(seq.n, seq.k, tuple(v + 1 for v in a))
    return MonotoneSeq(seq.n, seq.k, (0,) + a[:-1])


def orbit(seq: MonotoneSeq) -> list:
    """The full Serre orbit of seq, starting at seq."""
    out = [seq]
    cur = serre_step(seq)
    while cur != seq:
        out.append(cur)
        cur = serre_step(cur)
    return out


def orbit_partition(n: int, k: int) -> list:
    """All Serre orbits on X_n^k (each orbit a list of sequences)."""
    seen = set()
    parts = []
    for seq in enum_seqs(n, k):
        if seq in seen:
            continue
        orb = orbit(seq)
        seen.update(orb)
        parts.append(orb)
    return parts


def count_orbits_brute(k: int, vertices: int) -> int:
    """Serre-orbit count on X_{N-1}^k by explicit orbit partition."""
    if k < 1 or vertices < 1:
        raise ValueError("need k >= 1 and vertices >= 1")
    return len(orbit_partition(vertices - 1, k))


def divisors_of_kn(k: int, n: int) -> list:
    """Divisors of the pair (k, n): the d with 1 <= d <= k+1, d | k+1 and
    (k+1) | d(n+2).  Always contains k+1."""
    if not 1 <= k < n + 1:
        raise ValueError(f"need 1 <= k < n+1, got k={k}, n={n}")
    return [
        d
        for d in range(1, k + 2)
        if (k + 1) % d == 0 and (d * (n + 2)) % (k + 1) == 0
    ]


def is_d_additive(seq: MonotoneSeq, d: int) -> bool:
    """Whether seq satisfies the d-step additivity law.

    For the improper divisor d = k+1 the condition degenerates to a(0) = 0;
    for a proper divisor it pins a(d) = d*delta/(k+1) and forces
    a(j + i*d) = a(j) + i*a(d) wherever defined.
    """
    n, k, a = seq.n, seq.k, seq.values
    if d not in divisors_of_kn(k, n):
        raise ValueError(f"{d} is not a divisor of ({k},{n})")
    if d == k + 1:
        return a[0] == 0
    if a[d] * (k + 1) != d * seq.bound:
        return False
    for j in range(k + 1):
        i = 1
        while j + i * d <= k:
            if a[j + i * d] != a[j] + i * a[d]:
                return False
            i += 1
    return True


def period(seq: MonotoneSeq) -> int:
    """Least divisor d of (k, n) for which seq is d-additive.

    Defined only for sequences with vanishing leading entry; the Serre orbit
    of such a sequence has exactly d(n+2)/(k+1) elements.
    """
    if seq.values[0] != 0:
        raise ValueError("period needs a(0) = 0")
    for d in divisors_of_kn(seq.k, seq.n):
        if is_d_additive(seq, d):
            return d
    raise AssertionError("k+1 is always a divisor; unreachable")


def count_d_additive(n: int, k: int, d: int) -> int:
    """Closed-form size of the d-additive subset: C(d(n+2)/(k+1)-1, d-1)."""
    if d not in divisors_of_kn(k, n):
        raise ValueError(f"{d} is not a divisor of ({k},{n})")
    return comb(d * (n + 2) // (k + 1) - 1, d - 1)


def count_orbits_formula(k: int, vertices: int) -> int:
    """Serre-orbit count on X_{N-1}^k via the Moebius divisor sum.

    With D = gcd(k+1, N+1) the count is
        sum over divisor pairs y | x | D with mu(x/y) != 0 of
        D*mu(x/y) / ((k+1)*x) * C(y(N+1)/D - 1, y(k+1)/D - 1).
    Agrees with count_orbits_brute everywhere; equals 1 at k = N and 0 for
    k > N.
    """
    if k < 1 or vertices < 1:
        raise ValueError("need k >= 1 and vertices >= 1")
    if k > vertices:
        return 0
    m = vertices + 1  # = n+2 in internal indexing
    d_big = gcd(k + 1, m)
    total = Fraction(0)
    for x in divisors(d_big):
        for y in divisors(x):
            mu = mobius(x // y)
            if mu == 0:
                continue
            total += Fraction(d_big * mu, (k + 1) * x) * comb(
                y * m // d_big - 1, y * (k + 1) // d_big - 1
            )
    if total.denominator != 1:
        raise AssertionError(f"non-integral orbit count {total}")
    return int(total)


# ---------------------------------------------------------------------------
# noncommutative curves (genus -1 and 0) in the A-type category
# ---------------------------------------------------------------------------


def count_genus(genus: int, vertices: int, group: str = "id") -> int:
    """|C_genus(D^b(A_N))| for genus in {-1, 0}, modulo nothing ("id") or
    modulo all autoequivalences ("full").  Positive genus gives 0."""
    if vertices < 1:
        raise ValueError("need vertices >= 1")
    if group not in ("id", "full"):
        raise ValueError(f"unknown group {group!r}")
    if genus >= 1:
        return 0
    n = vertices - 1
    if genus == 0:
        if group == "id":
            return comb(n + 2, 3)
        if (n - 1) % 3 != 0:
            return (n + 1) * n // 6
        return ((n + 1) * n + 4) // 6
    if genus == -1:
        if group == "id":
            return 2 * comb(n + 2, 4)
        if n % 2 == 1:
            return (n - 1) * n * (n + 1) // 12
        return n * (n * n + 2) // 12
    raise ValueError(f"unsupported genus {genus}")


def enum_genus_minus1(n: int) -> list:
    """All genus -1 subcategories of the ambient category with n+1 vertices,
    as sorted orthogonal interval pairs; 2*C(n+2, 4) of them.

    The two shapes are separated intervals with a gap of at least two
    (b < i-1) and strictly nested intervals (a < i <= j < b).
    """
    if n < 0:
        raise ValueError("need n >= 0")
    out = []
    for a in range(n + 1):
        for b in range(a, n + 1):
            for i in range(b + 2, n + 1):
                for j in range(i, n + 1):
                    out.append(GenSetA((Interval(a, b), Interval(i, j))))
    for a in range(n + 1):
        for b in range(a + 2, n + 1):
            for i in range(a + 1, b):
                for j in range(i, b):
                    out.append(GenSetA((Interval(a, b), Interval(i, j))))
    return sorted(out)


def serre_on_point(i: int, j: int, n: int):
    """Serre image of the interval object s_{i,j}: a new interval plus a
    flag recording whether a shift [1] was picked up."""
    if not 0 <= i <= j <= n:
        raise ValueError(f"interval ({i},{j}) outside 0..{n}")
    if j < n:
        return Interval(i + 1, j + 1), True
    return Interval(0, i), False


def serre_on_pair(pair: GenSetA, n: int) -> GenSetA:
    """Serre image of an orthogonal pair, renormalized (sorted)."""
    imgs = [serre_on_point(g.i, g.j, n)[0] for g in pair.generators]
    return GenSetA(tuple(sorted(imgs)))


def genus_minus1_orbits(n: int) -> list:
    """Serre orbits on the genus -1 subcategories, by explicit partition."""
    seen = set()
    parts = []
    for pair in enum_genus_minus1(n):
        if pair in seen:
            continue
        orb = [pair]
        cur = serre_on_pair(pair, n)
        while cur != pair:
            orb.append(cur)
            cur = serre_on_pair(cur, n)
        seen.update(orb)
        parts.append(orb)
    return parts


def point_orbits(n: int) -> list:
    """Serre orbits on the interval objects themselves."""
    seen = set()
    parts = []
    for iv in enum_points(n):
        if iv in seen:
            continue
        orb = [iv]
        cur = serre_on_point(iv.i, iv.j, n)[0]
        while cur != iv:
            orb.append(cur)
            cur = serre_on_point(cur.i, cur.j, n)[0]
        seen.update(orb)
        parts.append(orb)
    return parts


# exhaustive pair classification, used by the graph layer ------------------


def interval_pair_is_exceptional(x: Interval, y: Interval, n: int) -> bool:
    """(s_x, s_y) is an exceptional pair iff all homs from s_y to s_x vanish."""
    q = line_quiver(n)
    return euler_form(q, interval_dim(y, n), interval_dim(x, n)) == 0


def interval_total_hom(x: Interval, y: Interval, n: int) -> int:
    """Total hom dimension (all degrees) from s_x to s_y: |<dim x, dim y>|."""
    q = line_quiver(n)
    return abs(euler_form(q, interval_dim(x, n), interval_dim(y, n)))
