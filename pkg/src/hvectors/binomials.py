"""Exact binomial arithmetic and the Macaulay growth operator."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


def binom(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n."""
    return comb(n, k)


@dataclass(frozen=True)
class BinomialExpansion:
    """Decomposition n = C(t_i, i) + C(t_{i-1}, i-1) + ... + C(t_j, j).

    Tops strictly decrease, bottoms run down by exactly one from `index`
    to some j >= 1, and the last term satisfies t_j >= j.  Under these
    constraints the decomposition is unique.
    """

    value: int
    index: int
    terms: tuple[tuple[int, int], ...]

    def bound(self) -> int:
        """Sum after raising every top and bottom by one: the largest legal successor."""
        return sum(comb(t + 1, b + 1) for t, b in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"C({t},{b})" for t, b in self.terms)


def _largest_top(remaining: int, bottom: int) -> int:
    """Largest t with C(t, bottom) <= remaining, found by galloping then bisecting."""
    high = bottom + 1
    while comb(high, bottom) <= remaining:
        high *= 2
    low = bottom  # C(bottom, bottom) = 1 <= remaining
    while high - low > 1:
        mid = (low + high) // 2
        if comb(mid, bottom) <= remaining:
            low = mid
        else:
            high = mid
    return low


def expand(n: int, i: int) -> BinomialExpansion:
    """The i-binomial expansion of n >= 1, built greedily from the largest top."""
    if n < 1 or i < 1:
        raise ValueError(f"binomial expansion needs n >= 1 and i >= 1, got n={n}, i={i}")
    terms: list[tuple[int, int]] = []
    remaining = n
    bottom = i
    while remaining > 0:
        top = _largest_top(remaining, bottom)
        terms.append((top, bottom))
        remaining -= comb(top, bottom)
        bottom -= 1
    return BinomialExpansion(value=n, index=i, terms=tuple(terms))


@lru_cache(maxsize=None)
def macaulay_bound(n: int, i: int) -> int:
    """Largest value allowed in degree i+1 given value n in degree i.

    Zero propagates: once a graded piece vanishes, all later ones do.
    """
    if i < 1:
        raise ValueError(f"growth step index must be >= 1, got {i}")
    if n < 0:
        raise ValueError(f"growth bound needs n >= 0, got {n}")
    if n == 0:
        return 0
    return expand(n, i).bound()
