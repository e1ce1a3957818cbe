"""Small exact number-theory helpers shared by the counting modules."""

from functools import lru_cache


def divisors(x: int) -> list[int]:
    """Sorted list of positive divisors of x >= 1."""
    if x < 1:
        raise ValueError(f"divisors: need x >= 1, got {x}")
    small, large = [], []
    d = 1
    while d * d <= x:
        if x % d == 0:
            small.append(d)
            if d != x // d:
                large.append(x // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def prime_factors(x: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of x >= 1 as ((p, multiplicity), ...)."""
    if x < 1:
        raise ValueError(f"prime_factors: need x >= 1, got {x}")
    out = []
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if x > 1:
        out.append((x, 1))
    return tuple(out)


def mobius(x: int) -> int:
    """Moebius function: (-1)^(#prime factors) on squarefree x, else 0."""
    out = 1
    for _, e in prime_factors(x):
        if e > 1:
            return 0
        out = -out
    return out


def euler_phi(x: int) -> int:
    """Euler totient."""
    out = x
    for p, _ in prime_factors(x):
        out = out // p * (p - 1)
    return out
