"""Steiner systems (lambda = 1): constructors and a brute-force verifier.

Steiner triple systems come from the Bose (v = 3 mod 6) and Skolem
(v = 1 mod 6) quasigroup constructions.  Steiner quadruple systems come from
the doubling construction applied to the base orders 4, 8, 10 and 14; SQS(8)
is the octagon system drawn with rotations, SQS(10) and SQS(14) were found
by the exact-cover engine and ship as data files.
"""

from __future__ import annotations

import itertools
import os
import threading
from dataclasses import dataclass, field
from importlib import resources
from math import comb
from pathlib import Path

from .errors import InfeasibleParameters, UnsupportedConstruction

CACHE_ENV = "SPHERE_FACTOR_CACHE_DIR"


@dataclass
class DesignInstance:
    v: int
    k: int
    t: int
    blocks: list[tuple[int, ...]]

    @property
    def expected_blocks(self) -> int:
        return comb(self.v, self.t) // comb(self.k, self.t)

    def sorted(self) -> "DesignInstance":
        return DesignInstance(self.v, self.k, self.t, sorted(tuple(sorted(b)) for b in self.blocks))


@dataclass
class OneFactorization:
    v: int
    factors: list[list[tuple[int, int]]]


@dataclass
class DesignReport:
    valid: bool
    uncovered: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    block_count_ok: bool = True
    malformed: list[tuple[int, str]] = field(default_factory=list)


def verify_design(d: DesignInstance) -> DesignReport:
    """Count how often every t-subset is covered; report anything but exactly once.

    ``uncovered`` lists ``(subset, count)`` for each t-subset with count != 1.
    Malformed blocks (wrong size, repeated or out-of-range points) are listed
    in ``malformed`` and contribute nothing to coverage.
    """
    malformed = []
    counts: dict[tuple[int, ...], int] = {}
    for i, block in enumerate(d.blocks):
        pts = tuple(sorted(block))
        if len(pts) != d.k:
            malformed.append((i, f"block has {len(pts)} points, expected {d.k}"))
            continue
        if len(set(pts)) != len(pts):
            malformed.append((i, "repeated point"))
            continue
        if pts and (pts[0] < 0 or pts[-1] >= d.v):
            malformed.append((i, f"point outside 0..{d.v - 1}"))
            continue
        for s in itertools.combinations(pts, d.t):
            counts[s] = counts.get(s, 0) + 1
    bad = [(s, counts.get(s, 0)) for s in itertools.combinations(range(d.v), d.t) if counts.get(s, 0) != 1]
    count_ok = d.k > 0 and comb(d.v, d.t) % comb(d.k, d.t) == 0 and len(d.blocks) == d.expected_blocks
    return DesignReport(not bad and count_ok and not malformed, bad, count_ok, malformed)


def _require_valid(d: DesignInstance, what: str) -> None:
    rep = verify_design(d)
    if not rep.valid:
        raise AssertionError(f"{what} produced an invalid design: {rep.uncovered[:5]}")


# -- triple systems ---------------------------------------------------------

def construct_sts(v: int) -> DesignInstance:
    if v < 3 or v % 6 not in (1, 3):
        raise InfeasibleParameters(f"no Steiner triple system of order {v}: need v = 1 or 3 (mod 6)")
    d = _bose(v) if v % 6 == 3 else _skolem(v)
    d = d.sorted()
    _require_valid(d, f"STS({v})")
    return d


def _bose(v: int) -> DesignInstance:
    # idempotent commutative quasigroup on Z_m, m odd: x.y = (x + y) / 2
    m = v // 3
    half = (m + 1) // 2
    op = lambda x, y: (x + y) * half % m
    pt = lambda x, i: x + m * (i % 3)
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(m)]
    for i in range(3):
        for x, y in itertools.combinations(range(m), 2):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return DesignInstance(v, 3, 2, blocks)


def _skolem(v: int) -> DesignInstance:
    # half-idempotent commutative quasigroup on Z_2n; x.x = (x+n).(x+n) = x
    n = (v - 1) // 6
    m = 2 * n

    def op(x, y):
        s = (x + y) % m
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + n

    inf = v - 1
    pt = lambda x, i: x + m * (i % 3)
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for i in range(3):
        for x in range(n):
            blocks.append((inf, pt(n + x, i), pt(x, i + 1)))
        for x, y in itertools.combinations(range(m), 2):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return DesignInstance(v, 3, 2, blocks)


# -- one-factorizations and quadruple systems -------------------------------

def one_factorization(v: int) -> OneFactorization:
    """Circle method: point ``v-1`` sits at the centre, the rest on a circle."""
    if v < 2 or v % 2:
        raise ValueError(f"one-factorization needs an even v >= 2, got {v}")
    m = v - 1
    factors = []
    for i in range(m):
        pairs = [(i, m)]
        for j in range(1, v // 2):
            a, b = (i + j) % m, (i - j) % m
            pairs.append((min(a, b), max(a, b)))
        factors.append(sorted(pairs))
    return OneFactorization(v, factors)


def double_sqs(d: DesignInstance) -> DesignInstance:
    """SQS(v) -> SQS(2v) on points ``x`` and ``x + v``.

    Blocks of the input are copied into both halves; then for every factor
    of a one-factorization of K_v, each edge in the lower half is joined to
    each edge (of the same factor) in the upper half.
    """
    if d.k != 4 or d.t != 3:
        raise ValueError(f"doubling needs an SQS, got k={d.k}, t={d.t}")
    if d.v % 2:
        raise ValueError(f"doubling needs an even order, got v={d.v}")
    rep = verify_design(d)
    if not rep.valid:
        raise ValueError(f"input SQS({d.v}) is invalid: {len(rep.uncovered)} bad triples, block count ok={rep.block_count_ok}")
    v = d.v
    blocks = [tuple(sorted(b)) for b in d.blocks]
    blocks += [tuple(p + v for p in b) for b in blocks]
    for factor in one_factorization(v).factors:
        for a, b in factor:
            for c, e in factor:
                blocks.append((a, b, c + v, e + v))
    return DesignInstance(2 * v, 4, 3, blocks).sorted()


# Octagon system: four orbits under rotation of the labels 0..7.
FIGURE_SQS8 = [
    (0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 6, 7), (6, 7, 0, 1),
    (1, 2, 4, 7), (3, 4, 6, 1), (5, 6, 0, 3), (7, 0, 2, 5),
    (1, 2, 5, 6), (2, 3, 6, 7), (3, 4, 7, 0), (4, 5, 0, 1),
    (0, 2, 4, 6), (1, 3, 5, 7),
]
# Same list with the first block as it appears in print ("0234").
FIGURE_SQS8_PRINTED = [(0, 2, 3, 4)] + FIGURE_SQS8[1:]


def figure_sqs8(printed: bool = False) -> DesignInstance:
    blocks = FIGURE_SQS8_PRINTED if printed else FIGURE_SQS8
    return DesignInstance(8, 4, 3, [tuple(sorted(b)) for b in blocks])


SQS_SEARCHED_BASES = (10, 14)
_base_lock = threading.Lock()
_base_cache: dict[int, DesignInstance] = {}


def _load_searched_base(v: int) -> DesignInstance:
    from .exact_cover import CoverStatus, search_design
    from .formats import parse_design, serialize_design

    with _base_lock:
        if v in _base_cache:
            return _base_cache[v]
        name = f"sqs{v}.txt"
        cache_dir = os.environ.get(CACHE_ENV)
        text = None
        if cache_dir and (Path(cache_dir) / name).is_file():
            text = (Path(cache_dir) / name).read_text()
        if text is None:
            res = resources.files(__package__).joinpath("data", name)
            if res.is_file():
                text = res.read_text()
        if text is not None:
            d = parse_design(text)
        else:
            outcome = search_design(v, 4, 3)
            if outcome.status is not CoverStatus.SOLVED:
                raise UnsupportedConstruction(f"search for SQS({v}) ended with {outcome.status.value}")
            d = outcome.design
            if cache_dir:
                Path(cache_dir).mkdir(parents=True, exist_ok=True)
                (Path(cache_dir) / name).write_text(serialize_design(d))
        if (d.v, d.k, d.t) != (v, 4, 3) or not verify_design(d).valid:
            raise ValueError(f"cached SQS({v}) is not a valid quadruple system")
        _base_cache[v] = d
        return d


def sqs_supported(v: int) -> bool:
    """True when ``v`` is in the doubling closure of {4, 8, 10, 14}."""
    if v in (4, 8) or v in SQS_SEARCHED_BASES:
        return True
    return v % 2 == 0 and v // 2 >= 4 and v // 2 % 6 in (2, 4) and sqs_supported(v // 2)


def construct_sqs(v: int) -> DesignInstance:
    if v < 4 or v % 6 not in (2, 4):
        raise InfeasibleParameters(f"no Steiner quadruple system of order {v}: need v = 2 or 4 (mod 6)")
    if not sqs_supported(v):
        raise UnsupportedConstruction(f"SQS({v}) exists but is not reachable by doubling from 4, 8, 10, 14")
    if v == 4:
        return DesignInstance(4, 4, 3, [(0, 1, 2, 3)])
    if v == 8:
        return figure_sqs8()
    if v in SQS_SEARCHED_BASES:
        return _load_searched_base(v)
    return double_sqs(construct_sqs(v // 2))


# -- generic dispatch -------------------------------------------------------

def perfect_matching(v: int) -> DesignInstance:
    if v < 2 or v % 2:
        raise InfeasibleParameters(f"no perfect matching on {v} points: need v even")
    return DesignInstance(v, 2, 1, [(i, i + 1) for i in range(0, v, 2)])


def design_constructible(v: int, k: int, t: int) -> bool:
    """Whether a direct (search-free at call time) constructor covers (v, k, t)."""
    if not 0 <= t < k <= v:
        return False
    if k == v:
        return True
    if (k, t) == (2, 1):
        return v % 2 == 0
    if (k, t) == (3, 2):
        return v % 6 in (1, 3)
    if (k, t) == (4, 3):
        return v % 6 in (2, 4) and sqs_supported(v)
    return False


def obtain_design(v: int, k: int, t: int, budget=None) -> DesignInstance:
    """A (v, k, t) Steiner system from a constructor, else from bounded search.

    Raises ``InfeasibleParameters`` when divisibility fails and
    ``UnsupportedConstruction`` when nothing is found within ``budget``.
    """
    from .divisibility import in_divisibility_set
    from .exact_cover import CoverStatus, SearchBudget, search_design

    if not 0 < t < k <= v:
        raise InfeasibleParameters(f"need 0 < t < k <= v, got v={v} k={k} t={t}")
    if not in_divisibility_set(v, k, t).member:
        raise InfeasibleParameters(f"v={v} fails the divisibility conditions for k={k}, t={t}")
    if k == v:
        return DesignInstance(v, k, t, [tuple(range(v))])
    if (k, t) == (2, 1):
        return perfect_matching(v)
    if (k, t) == (3, 2):
        return construct_sts(v)
    if (k, t) == (4, 3) and sqs_supported(v):
        return construct_sqs(v)
    outcome = search_design(v, k, t, budget or SearchBudget())
    if outcome.status is CoverStatus.SOLVED:
        return outcome.design
    if outcome.status is CoverStatus.INFEASIBLE:
        raise InfeasibleParameters(f"exhaustive search found no ({v},{k},{t}) system")
    raise UnsupportedConstruction(f"no construction for ({v},{k},{t}) and search hit its budget")
