"""Deterministic exact-cover search (Algorithm X over dict-of-sets).

The branching rule is fixed: pick the uncovered element with the fewest
remaining candidates (ties broken by lowest element index) and try its
candidates in ascending id order.  Two runs on the same problem therefore
expand the same nodes and return the same solution.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .designs import DesignInstance, verify_design
from .errors import MalformedProblem


class CoverStatus(enum.Enum):
    SOLVED = "Solved"
    INFEASIBLE = "Infeasible"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits; ``None`` means unlimited."""

    max_nodes: int | None = None
    max_millis: int | None = None

    def __post_init__(self):
        for name in ("max_nodes", "max_millis"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")


UNLIMITED = SearchBudget()


@dataclass
class CoverProblem:
    universe_size: int
    candidates: list[tuple[Hashable, tuple[int, ...]]]

    def validate(self) -> None:
        if self.universe_size < 0:
            raise MalformedProblem("universe size must be non-negative")
        seen = set()
        for cid, elems in self.candidates:
            if cid in seen:
                raise MalformedProblem(f"duplicate candidate id {cid!r}")
            seen.add(cid)
            if not elems:
                raise MalformedProblem(f"candidate {cid!r} is empty")
            if len(set(elems)) != len(elems):
                raise MalformedProblem(f"candidate {cid!r} repeats an element")
            for e in elems:
                if not 0 <= e < self.universe_size:
                    raise MalformedProblem(
                        f"candidate {cid!r} has element {e} outside [0, {self.universe_size})"
                    )


@dataclass
class CoverOutcome:
    status: CoverStatus
    solution: list = field(default_factory=list)
    nodes_expanded: int = 0

    @property
    def solved(self) -> bool:
        return self.status is CoverStatus.SOLVED


class _BudgetHit(Exception):
    pass


class _Search:
    # Candidates are addressed by their position in the sorted id list, so
    # "ascending id order" is just ascending integer order here.

    def __init__(self, problem: CoverProblem, budget: SearchBudget):
        self.ids = sorted((cid for cid, _ in problem.candidates), key=_id_key)
        pos = {cid: i for i, cid in enumerate(self.ids)}
        self.rows: list[tuple[int, ...]] = [()] * len(self.ids)
        for cid, elems in problem.candidates:
            self.rows[pos[cid]] = tuple(sorted(elems))
        self.cols: dict[int, set[int]] = {e: set() for e in range(problem.universe_size)}
        for r, elems in enumerate(self.rows):
            for e in elems:
                self.cols[e].add(r)
        self.budget = budget
        self.nodes = 0
        self.deadline = None
        if budget.max_millis is not None:
            self.deadline = time.monotonic() + budget.max_millis / 1000.0
        self.partial: list[int] = []

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise _BudgetHit
        if self.deadline is not None and (self.nodes & 255) == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetHit

    def _select(self, r: int) -> list[set[int]]:
        cols = self.cols
        removed = []
        for e in self.rows[r]:
            for other in cols[e]:
                for f in self.rows[other]:
                    if f != e:
                        cols[f].discard(other)
            removed.append(cols.pop(e))
        return removed

    def _deselect(self, r: int, removed: list[set[int]]) -> None:
        cols = self.cols
        for e in reversed(self.rows[r]):
            cols[e] = removed.pop()
            for other in cols[e]:
                for f in self.rows[other]:
                    if f != e:
                        cols[f].add(other)

    def run(self) -> bool:
        cols = self.cols
        if not cols:
            return True
        best = None
        best_len = None
        for e, rs in cols.items():
            n = len(rs)
            if best_len is None or n < best_len or (n == best_len and e < best):
                best, best_len = e, n
                if n == 0:
                    break
        if best_len == 0:
            return False
        for r in sorted(cols[best]):
            self._tick()
            self.partial.append(r)
            removed = self._select(r)
            if self.run():
                return True
            self._deselect(r, removed)
            self.partial.pop()
        return False


def _id_key(cid):
    # Mixed id types are ordered by type name first so sorting never fails.
    return (type(cid).__name__, cid)


def solve_exact_cover(problem: CoverProblem, budget: SearchBudget = UNLIMITED) -> CoverOutcome:
    """Find the first exact cover of ``problem`` under the fixed branching rule.

    ``Infeasible`` is only reported after the search tree is exhausted; a hit
    budget is always reported as ``BudgetExhausted``.
    """
    problem.validate()
    search = _Search(problem, budget)
    try:
        found = search.run()
    except _BudgetHit:
        return CoverOutcome(CoverStatus.BUDGET_EXHAUSTED, [], search.nodes)
    if not found:
        return CoverOutcome(CoverStatus.INFEASIBLE, [], search.nodes)
    solution = [search.ids[r] for r in sorted(search.partial)]
    _check_partition(problem, solution)
    return CoverOutcome(CoverStatus.SOLVED, solution, search.nodes)


def _check_partition(problem: CoverProblem, solution: Sequence) -> None:
    lookup = dict(problem.candidates)
    counts = [0] * problem.universe_size
    for cid in solution:
        for e in lookup[cid]:
            counts[e] += 1
    if any(c != 1 for c in counts):
        raise AssertionError("exact-cover engine produced a non-partition")


def rank_subsets(v: int, t: int) -> dict[tuple[int, ...], int]:
    """Lexicographic rank of every ``t``-subset of ``range(v)``."""
    return {s: i for i, s in enumerate(itertools.combinations(range(v), t))}


def design_cover_problem(v: int, k: int, t: int, fix_first_block: bool = True) -> CoverProblem:
    """Exact-cover encoding of a (v, k, t) Steiner system.

    Elements are the t-subsets ranked lexicographically; candidates are the
    k-subsets, identified by themselves.  With ``fix_first_block`` the only
    block allowed through ``{0..t-1}`` is ``{0..k-1}``; every design can be
    relabelled to contain that block, so satisfiability is unchanged.
    """
    if not 0 <= t < k <= v:
        raise ValueError(f"need 0 <= t < k <= v, got v={v} k={k} t={t}")
    rank = rank_subsets(v, t)
    head = tuple(range(t))
    first = tuple(range(k))
    candidates = []
    for block in itertools.combinations(range(v), k):
        if fix_first_block and block != first and block[:t] == head:
            continue
        elems = tuple(rank[s] for s in itertools.combinations(block, t))
        candidates.append((block, elems))
    return CoverProblem(len(rank), candidates)


@dataclass
class DesignSearchOutcome:
    status: CoverStatus
    design: DesignInstance | None
    nodes_expanded: int


def search_design(v: int, k: int, t: int, budget: SearchBudget = UNLIMITED, fix_first_block: bool = True) -> DesignSearchOutcome:
    """Find a (v, k, t) Steiner system by exact cover over all k-subsets."""
    if not 0 <= t < k <= v:
        raise ValueError(f"need t < k <= v, got v={v} k={k} t={t}")
    problem = design_cover_problem(v, k, t, fix_first_block=fix_first_block)
    outcome = solve_exact_cover(problem, budget)
    design = None
    if outcome.status is CoverStatus.SOLVED:
        design = DesignInstance(v, k, t, sorted(outcome.solution))
        if not verify_design(design).valid:
            raise AssertionError("exact-cover search returned an invalid design")
    return DesignSearchOutcome(outcome.status, design, outcome.nodes_expanded)
