"""Deterministic generators for h-vector families with a fixed socle degree."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .binomials import macaulay_bound
from .sequences import HVector, is_si_sequence


class SequenceFilter(Enum):
    ALL_O_SEQUENCES = "o-sequence"
    SYMMETRIC = "symmetric"
    SI = "si"
    SYMMETRIC_NOT_SI = "symmetric-not-si"


@dataclass(frozen=True)
class EnumerationSpec:
    """One finite enumeration box: exact socle degree, codimension, entry cap."""

    socle_degree: int
    codimension: int
    entry_cap: int = 25
    filter: SequenceFilter = SequenceFilter.SI

    def __post_init__(self) -> None:
        if self.socle_degree < 0:
            raise ValueError(f"socle degree must be >= 0, got {self.socle_degree}")
        if self.codimension < 1:
            raise ValueError(f"codimension must be >= 1, got {self.codimension}")
        if self.entry_cap < self.codimension:
            raise ValueError(
                f"entry cap {self.entry_cap} is below codimension {self.codimension}"
            )


def _differentiable_prefixes(
    codimension: int, length: int, cap: int
) -> Iterator[tuple[int, ...]]:
    """Prefixes (1, r, h_2, ...) of the given length whose first difference obeys growth.

    Extensions are driven by the bound on the difference sequence, so no
    filtering happens: everything constructed is differentiable.  Yields
    in ascending entry order, which is lexicographic order of the output.
    """
    if length == 1:
        yield (1,)
        return
    if codimension > cap:
        return

    def extend(values: tuple[int, ...], deltas: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(values) == length:
            yield values
            return
        d = len(values)
        limit = min(macaulay_bound(deltas[-1], d - 1), cap - values[-1])
        for delta in range(limit + 1):
            yield from extend(values + (values[-1] + delta,), deltas + (delta,))

    yield from extend((1, codimension), (1, codimension - 1))


def _free_prefixes(codimension: int, length: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Prefixes (1, r, h_2, ...) with arbitrary positive entries up to the cap."""
    if length == 1:
        yield (1,)
        return
    if codimension > cap:
        return

    def extend(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(values) == length:
            yield values
            return
        for value in range(1, cap + 1):
            yield from extend(values + (value,))

    yield from extend((1, codimension))


def _mirror(prefix: tuple[int, ...], socle_degree: int) -> tuple[int, ...]:
    if socle_degree % 2:
        return prefix + prefix[::-1]
    return prefix + prefix[-2::-1]


def _symmetric_stream(spec: EnumerationSpec, prefixes) -> Iterator[HVector]:
    e = spec.socle_degree
    if e == 0:
        return
    if e == 1:
        if spec.codimension == 1:
            yield HVector((1, 1))
        return
    for prefix in prefixes(spec.codimension, e // 2 + 1, spec.entry_cap):
        yield HVector(_mirror(prefix, e))


def _o_sequence_stream(spec: EnumerationSpec) -> Iterator[HVector]:
    e = spec.socle_degree
    if e == 0:
        return

    def extend(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        d = len(values) - 1
        if d == e:
            yield values
            return
        limit = min(macaulay_bound(values[-1], d), spec.entry_cap)
        for value in range(1, limit + 1):
            yield from extend(values + (value,))

    if spec.codimension > spec.entry_cap:
        return
    for values in extend((1, spec.codimension)):
        yield HVector(values)


def enumerate_hvectors(spec: EnumerationSpec) -> Iterator[HVector]:
    """Every h-vector in the box passing the filter, in lexicographic order."""
    if spec.filter is SequenceFilter.ALL_O_SEQUENCES:
        yield from _o_sequence_stream(spec)
    elif spec.filter is SequenceFilter.SYMMETRIC:
        yield from _symmetric_stream(spec, _free_prefixes)
    elif spec.filter is SequenceFilter.SI:
        yield from _symmetric_stream(spec, _differentiable_prefixes)
    elif spec.filter is SequenceFilter.SYMMETRIC_NOT_SI:
        for h in _symmetric_stream(spec, _free_prefixes):
            if not is_si_sequence(h.entries):
                yield h
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown filter {spec.filter}")


def count_by_degree(
    codimension: int,
    max_socle_degree: int,
    entry_cap: int,
    filter: SequenceFilter,
) -> dict[int, int]:
    """Stream length of each per-degree enumeration up to the maximum degree."""
    counts = {}
    for e in range(max_socle_degree + 1):
        spec = EnumerationSpec(
            socle_degree=e,
            codimension=codimension,
            entry_cap=entry_cap,
            filter=filter,
        )
        counts[e] = sum(1 for _ in enumerate_hvectors(spec))
    return counts
