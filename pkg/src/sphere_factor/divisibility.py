"""Binomial divisibility conditions and per-family feasibility verdicts."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError
from .polytope import Family, SkeletonSpec, ridge_multiplicity


def exact_binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class LevelCheck:
    h: int
    divisor: int
    dividend: int
    passes: bool


@dataclass(frozen=True)
class DivisibilityReport:
    v: int
    k: int
    ell: int
    per_level: tuple[LevelCheck, ...]
    member: bool


def in_divisibility_set(v: int, k: int, ell: int) -> DivisibilityReport:
    """Test ``C(k-h, ell-h) | C(v-h, ell-h)`` for ``0 <= h < ell``, with ``ell-1 < k <= v``."""
    if ell < 1:
        raise ValueError(f"ell must be at least 1, got {ell}")
    if k <= ell - 1:
        raise ValueError(f"need k > ell - 1, got k={k}, ell={ell}")
    checks = []
    for h in range(ell):
        divisor = exact_binomial(k - h, ell - h)
        dividend = exact_binomial(v - h, ell - h) if v - h >= 0 else 0
        checks.append(LevelCheck(h, divisor, dividend, dividend % divisor == 0))
    member = k <= v and all(c.passes for c in checks)
    return DivisibilityReport(v, k, ell, tuple(checks), member)


def feasible_range(k: int, ell: int, vmin: int, vmax: int) -> list[int]:
    if vmin > vmax:
        raise ValueError("vmin must not exceed vmax")
    return [v for v in range(max(vmin, 0), vmax + 1) if in_divisibility_set(v, k, ell).member]


@dataclass
class ExceptionTable:
    """Divisibility-feasible ``(k, ell, v)`` triples declared to have no design.

    Empty by default: only the finiteness of the exception sets is known.
    """

    entries: set[tuple[int, int, int]] = field(default_factory=set)

    def __contains__(self, triple) -> bool:
        return tuple(triple) in self.entries

    @classmethod
    def parse(cls, text: str) -> "ExceptionTable":
        entries = set()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3 or not all(p.isdigit() for p in parts):
                raise ParseError(f"expected 'k l v', got {raw.strip()!r}", lineno)
            k, ell, v = (int(p) for p in parts)
            entries.add((k, ell, v))
        return cls(entries)

    @classmethod
    def load(cls, path) -> "ExceptionTable":
        return cls.parse(Path(path).read_text())


class Verdict(enum.Enum):
    CONSTRUCTIVE = "FactorableConstructive"
    EXISTENTIAL = "FactorableExistential"
    NOT_FACTORABLE = "NotFactorable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FeasibilityVerdict:
    spec: SkeletonSpec
    verdict: Verdict
    reason: str

    def __str__(self):
        return f"{self.spec}: {self.verdict.value} [{self.reason}]"


def skeleton_feasibility(spec: SkeletonSpec, exceptions: ExceptionTable | None = None) -> FeasibilityVerdict:
    """Decide what is known about factoring ``spec`` into canonical spheres.

    Reason tags:
      ``join``                 cross-polytope, explicit join construction
      ``evenness``             some ridge lies on an odd number of faces
      ``divisibility``         the required design fails the binomial conditions
      ``exception-table``      the design order is listed as an exception
      ``design-construction``  an implemented design constructor applies
      ``design-existence``     divisibility holds; existence only, no construction
      ``conjectured-necessity`` cube case outside divisibility; open
    """
    from .designs import design_constructible

    if spec.ell < 1:
        raise ValueError("feasibility needs ell >= 1")
    exceptions = exceptions or ExceptionTable()
    S = FeasibilityVerdict
    if spec.family is Family.CROSS:
        return S(spec, Verdict.CONSTRUCTIVE, "join")

    if spec.family is Family.SIMPLEX:
        # the h = ell condition of the divisibility test is evenness itself
        v, k, t = spec.n + 1, spec.ell + 2, spec.ell + 1
        if not in_divisibility_set(v, k, t).member:
            return S(spec, Verdict.NOT_FACTORABLE, "divisibility")
        if (k, t, v) in exceptions:
            return S(spec, Verdict.NOT_FACTORABLE, "exception-table")
    else:
        if ridge_multiplicity(spec) % 2:
            return S(spec, Verdict.NOT_FACTORABLE, "evenness")
        v, k, t = spec.n, spec.ell + 1, spec.ell
        if not in_divisibility_set(v, k, t).member:
            return S(spec, Verdict.UNKNOWN, "conjectured-necessity")
        if (k, t, v) in exceptions:
            return S(spec, Verdict.UNKNOWN, "exception-table")

    if design_constructible(v, k, t):
        return S(spec, Verdict.CONSTRUCTIVE, "design-construction")
    return S(spec, Verdict.EXISTENTIAL, "design-existence")
