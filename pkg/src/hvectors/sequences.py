"""H-vectors and the growth, symmetry and differentiability predicates on them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .binomials import macaulay_bound


def _strip_trailing_zeros(seq: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(seq)
    end = len(entries)
    while end > 0 and entries[end - 1] == 0:
        end -= 1
    return entries[:end]


@dataclass(frozen=True)
class HVector:
    """Graded dimension vector (h_0, ..., h_e) with h_0 = 1 and h_e > 0.

    Trailing zeros are stripped on construction so the socle degree e is
    well defined; internal zeros are rejected because no later degree can
    be positive once one vanishes.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int]) -> None:
        normalized = _strip_trailing_zeros(int(x) for x in entries)
        if not normalized:
            raise ValueError("h-vector has no positive entry")
        if normalized[0] != 1:
            raise ValueError(f"h-vector must start with 1, got {normalized[0]}")
        for degree, value in enumerate(normalized):
            if value < 0:
                raise ValueError(f"negative entry {value} at degree {degree}")
            if value == 0:
                raise ValueError(f"internal zero at degree {degree}")
        object.__setattr__(self, "entries", normalized)

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    @property
    def codimension(self) -> int:
        return self.entries[1] if len(self.entries) > 1 else 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


def o_sequence_violation(seq: Sequence[int]) -> int | None:
    """First step d where seq[d+1] exceeds the Macaulay bound of seq[d].

    A zero tail is ignored; an internal zero followed by a positive entry
    violates the bound at the zero's degree.  Returns None when every step
    is legal.
    """
    entries = tuple(seq)
    if not entries or entries[0] != 1:
        raise ValueError("growth check needs a sequence starting with 1")
    if any(x < 0 for x in entries):
        raise ValueError("growth check needs non-negative entries")
    entries = _strip_trailing_zeros(entries)
    for d in range(1, len(entries) - 1):
        if entries[d + 1] > macaulay_bound(entries[d], d):
            return d
    return None


def is_o_sequence(seq: Sequence[int]) -> bool:
    return o_sequence_violation(seq) is None


def first_difference(seq: Sequence[int]) -> tuple[int, ...]:
    """(1, v_1 - v_0, v_2 - v_1, ...); entries may be negative."""
    entries = tuple(seq)
    if not entries or entries[0] != 1:
        raise ValueError("first difference needs a sequence starting with 1")
    return (1,) + tuple(entries[d] - entries[d - 1] for d in range(1, len(entries)))


def differentiability_violation(seq: Sequence[int]) -> int | None:
    """Degree at which the first difference stops being a legal growth sequence."""
    diff = first_difference(seq)
    for degree, value in enumerate(diff):
        if value < 0:
            return degree
    return o_sequence_violation(diff)


def is_differentiable(seq: Sequence[int]) -> bool:
    return differentiability_violation(seq) is None


def symmetry_violation(seq: Sequence[int]) -> int | None:
    entries = tuple(seq)
    e = len(entries) - 1
    for i in range(e // 2 + 1):
        if entries[i] != entries[e - i]:
            return i
    return None


def is_symmetric(seq: Sequence[int]) -> bool:
    return symmetry_violation(seq) is None


def unimodality_violation(seq: Sequence[int]) -> int | None:
    """Degree of the first strict ascent that follows a strict descent."""
    entries = tuple(seq)
    descended = False
    for i in range(len(entries) - 1):
        if entries[i + 1] < entries[i]:
            descended = True
        elif entries[i + 1] > entries[i] and descended:
            return i + 1
    return None


def is_unimodal(seq: Sequence[int]) -> bool:
    return unimodality_violation(seq) is None


def first_half(seq: Sequence[int]) -> tuple[int, ...]:
    """(h_0, ..., h_floor(e/2))."""
    entries = tuple(seq)
    e = len(entries) - 1
    return entries[: e // 2 + 1]


class Verdict(Enum):
    GORENSTEIN = "Gorenstein"
    NOT_GORENSTEIN = "NotGorenstein"
    UNDECIDED = "Undecided"


class ReasonKind(Enum):
    NOT_SYMMETRIC = "not_symmetric"
    NOT_O_SEQUENCE = "not_o_sequence"
    FIRST_HALF_NOT_DIFFERENTIABLE = "first_half_not_differentiable"
    SI_WITNESS = "si_witness"
    OUT_OF_SCOPE_CODIMENSION = "out_of_scope_codimension"


@dataclass(frozen=True)
class Reason:
    kind: ReasonKind
    degree: int | None = None

    def __str__(self) -> str:
        if self.degree is None:
            return self.kind.value
        return f"{self.kind.value}(degree {self.degree})"


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    codimension: int
    reasons: tuple[Reason, ...]


def si_violations(seq: Sequence[int]) -> tuple[Reason, ...]:
    """Reasons an h-vector fails to be an SI-sequence; empty means it is one."""
    reasons: list[Reason] = []
    sym = symmetry_violation(seq)
    if sym is not None:
        reasons.append(Reason(ReasonKind.NOT_SYMMETRIC, sym))
    diff = differentiability_violation(first_half(seq))
    if diff is not None:
        reasons.append(Reason(ReasonKind.FIRST_HALF_NOT_DIFFERENTIABLE, diff))
    return tuple(reasons)


def is_si_sequence(seq: Sequence[int]) -> bool:
    return not si_violations(seq)


def classify_gorenstein(h: HVector) -> ClassificationReport:
    """Three-way Gorenstein verdict with machine-checkable reasons.

    An SI-sequence is a Gorenstein h-vector in every codimension.  In
    codimension <= 3 the converse holds, so any SI failure certifies
    NotGorenstein there.  In higher codimension only symmetry and Macaulay
    growth remain necessary conditions; a symmetric growth-legal non-SI
    vector is genuinely out of this toolkit's reach and stays Undecided.
    """
    codim = h.codimension
    violations = si_violations(h.entries)
    if not violations:
        return ClassificationReport(Verdict.GORENSTEIN, codim, (Reason(ReasonKind.SI_WITNESS),))
    if codim <= 3:
        return ClassificationReport(Verdict.NOT_GORENSTEIN, codim, violations)
    sym = symmetry_violation(h.entries)
    if sym is not None:
        return ClassificationReport(
            Verdict.NOT_GORENSTEIN, codim, (Reason(ReasonKind.NOT_SYMMETRIC, sym),)
        )
    growth = o_sequence_violation(h.entries)
    if growth is not None:
        return ClassificationReport(
            Verdict.NOT_GORENSTEIN, codim, (Reason(ReasonKind.NOT_O_SEQUENCE, growth),)
        )
    return ClassificationReport(
        Verdict.UNDECIDED, codim, (Reason(ReasonKind.OUT_OF_SCOPE_CODIMENSION),)
    )
