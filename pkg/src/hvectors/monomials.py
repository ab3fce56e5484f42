"""Monomial-quotient oracles: lex-segment realizations, socle vectors, brute-force growth.

Monomials are exponent tuples, one slot per variable.  The fixed term order
compares exponents position by position with a higher exponent on an earlier
variable ranking larger, and every per-degree collection is stored largest
first so that output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .sequences import HVector

Monomial = tuple[int, ...]


class NotAnOSequenceError(ValueError):
    """Raised when a realization runs out of monomials at some degree."""

    def __init__(self, degree: int, available: int, requested: int) -> None:
        self.degree = degree
        self.available = available
        self.requested = requested
        super().__init__(
            f"NotAnOSequence({degree}): needs {requested} monomials of degree {degree}, "
            f"only {available} available"
        )


class InfeasibleSearchError(RuntimeError):
    """Raised when an exhaustive search would exceed its configured budget."""


@lru_cache(maxsize=None)
def monomials_of_degree(num_variables: int, degree: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in the given variables, largest first."""
    if num_variables == 0:
        return ((),) if degree == 0 else ()
    if num_variables == 1:
        return ((degree,),)
    result: list[Monomial] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(num_variables - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


def divisors(monomial: Monomial) -> tuple[Monomial, ...]:
    """Degree-(d-1) divisors of a degree-d monomial."""
    result = []
    for i, exponent in enumerate(monomial):
        if exponent > 0:
            result.append(monomial[:i] + (exponent - 1,) + monomial[i + 1 :])
    return tuple(result)


def render_monomial(monomial: Monomial) -> str:
    """1-based power-product notation, e.g. (2, 0, 1) -> 'x1^2*x3'."""
    parts = []
    for i, exponent in enumerate(monomial):
        if exponent == 1:
            parts.append(f"x{i + 1}")
        elif exponent > 1:
            parts.append(f"x{i + 1}^{exponent}")
    return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def _divisor_masks(num_variables: int, degree: int) -> tuple[int, ...]:
    """For each degree-d monomial, a bitmask of its divisors' positions in degree d-1."""
    previous = {m: k for k, m in enumerate(monomials_of_degree(num_variables, degree - 1))}
    masks = []
    for monomial in monomials_of_degree(num_variables, degree):
        mask = 0
        for divisor in divisors(monomial):
            mask |= 1 << previous[divisor]
        masks.append(mask)
    return tuple(masks)


@dataclass(frozen=True)
class SurvivorTable:
    """Per-degree standard monomials of a monomial quotient.

    The complement is closed under multiplication by variables: a monomial
    survives exactly when all of its one-step divisors survive.
    """

    num_variables: int
    per_degree: tuple[tuple[Monomial, ...], ...]

    @property
    def socle_degree(self) -> int:
        return len(self.per_degree) - 1


def lex_segment_realization(h: HVector) -> SurvivorTable:
    """Realize h by keeping, in each degree, the h_d smallest eligible monomials.

    Eligible means every one-step divisor survived the previous degree.
    Succeeds exactly when h satisfies Macaulay growth at every step; the
    reported failure degree is the first degree whose entry is too large.
    """
    num_variables = h.codimension
    levels: list[tuple[Monomial, ...]] = [monomials_of_degree(num_variables, 0)]
    survivor_mask = 1
    for degree in range(1, h.socle_degree + 1):
        all_monomials = monomials_of_degree(num_variables, degree)
        masks = _divisor_masks(num_variables, degree)
        candidates = [
            k for k, mask in enumerate(masks) if mask & survivor_mask == mask
        ]
        needed = h[degree]
        if len(candidates) < needed:
            raise NotAnOSequenceError(degree, len(candidates), needed)
        chosen = candidates[len(candidates) - needed :]
        levels.append(tuple(all_monomials[k] for k in chosen))
        survivor_mask = 0
        for k in chosen:
            survivor_mask |= 1 << k
    return SurvivorTable(num_variables=num_variables, per_degree=tuple(levels))


def hilbert_function(table: SurvivorTable) -> HVector:
    return HVector(tuple(len(level) for level in table.per_degree))


@dataclass(frozen=True)
class SocleVector:
    """Per-degree count of survivors annihilated by every variable."""

    entries: tuple[int, ...]

    @property
    def is_gorenstein(self) -> bool:
        return all(x == 0 for x in self.entries[:-1]) and self.entries[-1] == 1

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


def socle_vector(table: SurvivorTable) -> SocleVector:
    entries = []
    for degree, level in enumerate(table.per_degree):
        if degree + 1 < len(table.per_degree):
            above = set(table.per_degree[degree + 1])
        else:
            above = set()
        count = 0
        for monomial in level:
            killed = True
            for i in range(table.num_variables):
                bumped = monomial[:i] + (monomial[i] + 1,) + monomial[i + 1 :]
                if bumped in above:
                    killed = False
                    break
            if killed:
                count += 1
        entries.append(count)
    return SocleVector(tuple(entries))


def max_growth_bruteforce(
    n: int, i: int, r: int, *, node_budget: int = 10_000_000
) -> int:
    """Largest possible degree-(i+1) count over all n-element degree-i survivor sets.

    Maximizes, over n-subsets S of the degree-i monomials in r variables,
    the number of degree-(i+1) monomials whose one-step divisors all lie
    in S.  The search is exact: it branches over which degree-(i+1)
    monomials to cover, bounding the union of their divisor sets by n,
    which reaches the same maximum because any chosen union extends to an
    n-element S.  Raises InfeasibleSearchError past the node budget.
    """
    if n < 1 or i < 1 or r < 1:
        raise ValueError(f"needs n, i, r >= 1, got n={n}, i={i}, r={r}")
    lower = monomials_of_degree(r, i)
    if len(lower) < n:
        raise ValueError(
            f"only {len(lower)} monomials of degree {i} in {r} variables, needs {n}"
        )
    masks = _divisor_masks(r, i + 1)
    total = len(masks)
    best = 0
    nodes = 0

    def search(k: int, union: int, count: int) -> None:
        nonlocal best, nodes
        while k < total:
            nodes += 1
            if nodes > node_budget:
                raise InfeasibleSearchError(
                    f"search for n={n}, i={i}, r={r} exceeded {node_budget} nodes"
                )
            mask = masks[k]
            merged = union | mask
            if merged == union:
                count += 1  # divisors already paid for; always take it
                k += 1
                continue
            if merged.bit_count() > n:
                k += 1  # cannot afford this monomial's divisors
                continue
            if count + (total - k) <= best:
                return
            search(k + 1, merged, count + 1)
            k += 1
        if count > best:
            best = count

    search(0, 0, 0)
    return best


def complete_intersection_hvector(a: int, b: int, c: int) -> HVector:
    """Coefficients of prod over k in (a, b, c) of (1 + t + ... + t^(k-1))."""
    for exponent in (a, b, c):
        if exponent < 2:
            raise ValueError(f"exponents must be >= 2, got {exponent}")
    coeffs = [1]
    for k in (a, b, c):
        result = [0] * (len(coeffs) + k - 1)
        for p, x in enumerate(coeffs):
            for q in range(k):
                result[p + q] += x
        coeffs = result
    return HVector(tuple(coeffs))


def complete_intersection_table(a: int, b: int, c: int) -> SurvivorTable:
    """Survivors of the quotient by pure powers with the given exponents."""
    for exponent in (a, b, c):
        if exponent < 2:
            raise ValueError(f"exponents must be >= 2, got {exponent}")
    caps = (a, b, c)
    top = a + b + c - 3
    levels = []
    for degree in range(top + 1):
        levels.append(
            tuple(
                m
                for m in monomials_of_degree(3, degree)
                if all(m[i] < caps[i] for i in range(3))
            )
        )
    return SurvivorTable(num_variables=3, per_degree=tuple(levels))
