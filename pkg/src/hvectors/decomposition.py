"""Pivot decompositions of Gorenstein h-vectors and their growth-trace verification.

A pivot decomposition subtracts a shifted Gorenstein h-vector (itself an
SI-sequence here, which is equivalent in codimension <= 3) from degrees
j, ..., e so that the remainder is again a legal growth sequence.  For
codimension-3 symmetric vectors, existence of such a decomposition with
pivot 1 forces unimodality and the concavity inequalities verified below;
exhaustive absence of one certifies that a symmetric non-SI vector cannot
be Gorenstein.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .binomials import binom
from .enumeration import EnumerationSpec, SequenceFilter, enumerate_hvectors
from .sequences import (
    HVector,
    _strip_trailing_zeros,
    is_si_sequence,
    is_symmetric,
    o_sequence_violation,
)


class UnsupportedCodimensionError(ValueError):
    """Decomposition search is only decidable for codimension <= 3."""


class PreconditionViolatedError(ValueError):
    """Input does not satisfy a refutation or verification precondition."""


class TraceViolationError(RuntimeError):
    """A growth trace failed; this marks a bug, never a mathematical counterexample."""

    def __init__(self, degree: int, label: str, lhs: int, rhs: int) -> None:
        self.degree = degree
        self.label = label
        super().__init__(
            f"trace at degree {degree}: inequality {label} fails ({lhs} > {rhs})"
        )


@dataclass(frozen=True)
class PivotDecomposition:
    """Pivot j, subtrahend (a_j = 1, ..., a_e), and the leftover vector.

    The residual keeps full length e + 1; trailing zeros are only stripped
    inside growth checks and rendering.
    """

    pivot: int
    subtrahend: tuple[int, ...]
    residual: tuple[int, ...]


class TraceCase(Enum):
    SUBTRAHEND_GENERIC = "subtrahend_generic"
    RESIDUAL_STEP_GENERIC = "residual_step_generic"
    RESIDUAL_STEP_SMALL = "residual_step_small"


@dataclass(frozen=True)
class InequalityCheck:
    label: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class DegreeTrace:
    degree: int
    case: TraceCase
    inequalities: tuple[InequalityCheck, ...]


@dataclass(frozen=True)
class RefutedCandidate:
    subtrahend: tuple[int, ...]
    violation_degree: int


@dataclass(frozen=True)
class RefutationReport:
    h: HVector
    refuted: tuple[RefutedCandidate, ...]
    survivors: tuple[tuple[int, ...], ...]

    @property
    def candidate_count(self) -> int:
        return len(self.refuted) + len(self.survivors)


def _si_tails(max_codim: int, length: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """SI-sequences (1, b_1, ..., b_{length-1}) with b_k <= caps[k], ascending.

    These are the candidate subtrahends after re-indexing: an SI-sequence
    of small codimension is a Gorenstein h-vector, and in the pivot-1,
    codimension-3 regime every admissible subtrahend has codimension <= 3,
    so the family below is exhaustive there.
    """
    if length == 1:
        if caps[0] >= 1:
            yield (1,)
        return
    if caps[0] < 1:
        return
    socle = length - 1
    roof = max(caps)
    top = min(max_codim, caps[1])
    for b1 in range(1, top + 1):
        for candidate in _symmetric_differentiable(b1, socle, roof):
            if all(candidate[k] <= caps[k] for k in range(length)):
                yield candidate


def _symmetric_differentiable(codim: int, socle: int, cap: int) -> Iterator[tuple[int, ...]]:
    if socle == 1:
        if codim == 1:
            yield (1, 1)
        return
    spec = EnumerationSpec(
        socle_degree=socle,
        codimension=codim,
        entry_cap=max(codim, cap),
        filter=SequenceFilter.SI,
    )
    for h in enumerate_hvectors(spec):
        yield h.entries


def _candidate_subtrahends(
    h: HVector, pivot: int, max_codim: int
) -> Iterator[tuple[int, ...]]:
    length = h.socle_degree - pivot + 1
    caps = tuple(h[pivot + k] for k in range(length))
    yield from _si_tails(max_codim, length, caps)


def _residual(h: HVector, pivot: int, subtrahend: tuple[int, ...]) -> tuple[int, ...]:
    values = list(h.entries)
    for k, a in enumerate(subtrahend):
        values[pivot + k] -= a
    return tuple(values)


def find_pivot_decomposition(h: HVector, pivot: int = 1) -> PivotDecomposition | None:
    """Search for a decomposition at the given pivot; None when none exists.

    Candidates are not unique, so the lexicographically smallest valid
    subtrahend is returned as the canonical representative.  Refuses
    codimension >= 4, where the candidate family is not known to exhaust
    the Gorenstein h-vectors.
    """
    if h.codimension > 3:
        raise UnsupportedCodimensionError(
            f"decomposition search supports codimension <= 3, got {h.codimension}"
        )
    if not 1 <= pivot <= h.socle_degree:
        raise ValueError(f"pivot must lie in 1..{h.socle_degree}, got {pivot}")
    # candidates arrive in ascending lexicographic order, so first valid wins
    for subtrahend in _candidate_subtrahends(h, pivot, max_codim=_subtrahend_codim_cap(h, pivot)):
        residual = _residual(h, pivot, subtrahend)
        if o_sequence_violation(residual) is None:
            return PivotDecomposition(pivot=pivot, subtrahend=subtrahend, residual=residual)
    return None


def _subtrahend_codim_cap(h: HVector, pivot: int) -> int:
    if pivot + 1 > h.socle_degree:
        return 1
    return h[pivot + 1]


def refute_non_si(h: HVector) -> RefutationReport:
    """Exhaust all pivot-1 subtrahend candidates against a symmetric non-SI input.

    Every candidate must leave a residual violating growth somewhere; a
    surviving candidate would contradict the codimension-3 classification
    and is surfaced as a loud implementation-bug signal by the caller.
    """
    if h.codimension != 3:
        raise PreconditionViolatedError(
            f"refutation needs codimension 3, got {h.codimension}"
        )
    if not is_symmetric(h.entries):
        raise PreconditionViolatedError("refutation needs a symmetric input")
    if is_si_sequence(h.entries):
        raise PreconditionViolatedError("input is an SI-sequence; nothing to refute")
    refuted = []
    survivors = []
    for subtrahend in _candidate_subtrahends(h, pivot=1, max_codim=3):
        residual = _residual(h, 1, subtrahend)
        violation = _first_residual_violation(residual)
        if violation is None:
            survivors.append(subtrahend)
        else:
            refuted.append(RefutedCandidate(subtrahend, violation))
    return RefutationReport(h=h, refuted=tuple(refuted), survivors=tuple(survivors))


def _first_residual_violation(residual: tuple[int, ...]) -> int | None:
    """Degree of the first offending residual entry, None when all growth is legal."""
    for degree, value in enumerate(residual):
        if value < 0:
            return degree
    step = o_sequence_violation(residual)
    if step is None:
        return None
    return step + 1


def verify_decomposition_traces(
    h: HVector, decomposition: PivotDecomposition
) -> list[DegreeTrace]:
    """Check the concavity inequalities forced by a pivot-1 decomposition.

    For every first-half degree whose entry is below the generic value,
    one trace records which genericity case applies and the inequalities
    that case requires.  Also confirms the engine behind unimodality: a
    growth-legal residual starting (1, 2, ...) never increases again after
    a sub-generic entry.  Any failure raises TraceViolationError, since no
    valid decomposition of a symmetric codimension-3 vector can produce one.
    """
    _check_decomposition(h, decomposition)
    e = h.socle_degree
    subtrahend = decomposition.subtrahend
    residual = decomposition.residual

    stripped = _strip_trailing_zeros(residual)
    seen_subgeneric: int | None = None
    for d in range(len(stripped)):
        if seen_subgeneric is not None and d > seen_subgeneric:
            if stripped[d] > stripped[d - 1]:
                raise TraceViolationError(
                    d, "(residual-monotone)", stripped[d], stripped[d - 1]
                )
        if seen_subgeneric is None and stripped[d] < d + 1:
            seen_subgeneric = d

    def a(i: int) -> int:
        return subtrahend[i - 1]

    traces = []
    for i in range(1, e // 2 + 1):
        if h[i] >= binom(i + 2, 2):
            continue
        delta_prev = residual[i - 1]
        if a(i) == binom(i + 1, 2):
            case = TraceCase.SUBTRAHEND_GENERIC
        elif delta_prev == i:
            case = TraceCase.RESIDUAL_STEP_GENERIC
        elif delta_prev <= i - 1:
            case = TraceCase.RESIDUAL_STEP_SMALL
        else:
            raise TraceViolationError(i, "(residual-generic-cap)", delta_prev, i)
        checks = [InequalityCheck("(1)", h[i] - h[i - 1], h[i - 1] - h[i - 2])]
        if case is TraceCase.RESIDUAL_STEP_SMALL:
            checks.append(InequalityCheck("(2)", a(i) - a(i - 1), h[i - 1] - h[i - 2]))
            checks.append(InequalityCheck("(3)", h[i] - h[i - 1], a(i) - a(i - 1)))
        for check in checks:
            if not check.holds:
                raise TraceViolationError(i, check.label, check.lhs, check.rhs)
        traces.append(DegreeTrace(degree=i, case=case, inequalities=tuple(checks)))
    return traces


def _check_decomposition(h: HVector, decomposition: PivotDecomposition) -> None:
    if decomposition.pivot != 1:
        raise PreconditionViolatedError("trace verification needs pivot 1")
    if h.codimension != 3:
        raise PreconditionViolatedError(
            f"trace verification needs codimension 3, got {h.codimension}"
        )
    if not is_symmetric(h.entries):
        raise PreconditionViolatedError("trace verification needs a symmetric input")
    if len(decomposition.subtrahend) != h.socle_degree:
        raise PreconditionViolatedError("subtrahend length does not match the input")
    if decomposition.subtrahend[0] != 1:
        raise PreconditionViolatedError("subtrahend must start with 1")
    if not is_si_sequence(decomposition.subtrahend):
        raise PreconditionViolatedError("subtrahend is not an SI-sequence")
    if decomposition.residual != _residual(h, 1, decomposition.subtrahend):
        raise PreconditionViolatedError("residual does not match h minus the subtrahend")
    if any(x < 0 for x in decomposition.residual):
        raise PreconditionViolatedError("residual has a negative entry")
    if o_sequence_violation(decomposition.residual) is not None:
        raise PreconditionViolatedError("residual violates Macaulay growth")
