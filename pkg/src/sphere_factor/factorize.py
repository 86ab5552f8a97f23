"""Constructors for factorizations of skeleta into canonical spheres.

* cross-polytope: one octahedral sphere per ``(ell+1)``-subset of axes;
* simplex: one simplex boundary per block of a Steiner system;
* cube: push a simplex factorization through the ``2^sigma`` map, which
  turns a simplex on coordinate set ``T`` into the subcubes free exactly on
  ``T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .designs import DesignInstance, obtain_design, verify_design
from .errors import InfeasibleParameters
from .exact_cover import UNLIMITED, CoverProblem, CoverStatus, SearchBudget, solve_exact_cover
from .polytope import Face, Family, SkeletonSpec, boundary_faces, enumerate_faces, ridge_multiplicity


@dataclass(frozen=True)
class Block:
    faces: tuple[Face, ...]
    label: str | None = None


@dataclass(frozen=True)
class FactorizationCertificate:
    spec: SkeletonSpec
    blocks: tuple[Block, ...]

    @property
    def face_total(self) -> int:
        return sum(len(b.faces) for b in self.blocks)


def cross_factorization(n: int, ell: int) -> FactorizationCertificate:
    if not 1 <= ell < n:
        raise ValueError(f"need 1 <= ell < n, got n={n}, ell={ell}")
    spec = SkeletonSpec(Family.CROSS, n, ell)
    blocks = []
    for axes in itertools.combinations(range(1, n + 1), ell + 1):
        faces = sorted(
            Face(Family.CROSS, tuple(a * s for a, s in zip(axes, signs)))
            for signs in itertools.product((1, -1), repeat=ell + 1)
        )
        blocks.append(Block(tuple(faces), "axes " + " ".join(map(str, axes))))
    return FactorizationCertificate(spec, tuple(blocks))


def simplex_factorization_from_design(d: DesignInstance) -> FactorizationCertificate:
    """Each design block ``B`` becomes the boundary of the simplex on ``B``."""
    if d.k != d.t + 1:
        raise ValueError(f"design must have k = t + 1, got k={d.k}, t={d.t}")
    if not verify_design(d).valid:
        raise ValueError(f"design ({d.v},{d.k},{d.t}) is not a valid Steiner system")
    spec = SkeletonSpec(Family.SIMPLEX, d.v - 1, d.t - 1)
    blocks = []
    for b in d.blocks:
        b = tuple(sorted(b))
        faces = tuple(Face(Family.SIMPLEX, s) for s in itertools.combinations(b, d.t))
        blocks.append(Block(faces, "design " + " ".join(map(str, b))))
    return FactorizationCertificate(spec, tuple(blocks))


def exponentiate_simplex(sigma: Face, n: int) -> list[Face]:
    """Cube words of length ``n`` free exactly at ``sigma``'s vertices."""
    if sigma.family is not Family.SIMPLEX:
        raise ValueError("sigma must be a simplex face")
    if sigma.data[0] < 0 or sigma.data[-1] >= n:
        raise ValueError(f"vertices of {sigma} must lie in [0, {n})")
    return [Face(Family.CUBE, w) for w in _words_free_on(set(sigma.data), n)]


def _words_free_on(free: set[int], n: int) -> list[str]:
    fixed = [i for i in range(n) if i not in free]
    out = []
    for bits in itertools.product("01", repeat=len(fixed)):
        w = ["*"] * n
        for i, b in zip(fixed, bits):
            w[i] = b
        out.append("".join(w))
    return out


def exponentiate_factorization(cert: FactorizationCertificate) -> FactorizationCertificate:
    """Simplex factorization of level ``ell-1`` in dimension ``n-1`` -> cube
    factorization of level ``ell`` in dimension ``n``.

    A block with vertex support ``T`` (``|T| = ell+1``) yields one cube block
    per 0/1 assignment outside ``T``: the boundary of the subcube free on ``T``.
    """
    spec = cert.spec
    if spec.family is not Family.SIMPLEX:
        raise ValueError("exponentiation takes a simplex certificate")
    n, ell = spec.n + 1, spec.ell + 1
    out_spec = SkeletonSpec(Family.CUBE, n, ell)
    blocks = []
    for i, block in enumerate(cert.blocks):
        support = _simplex_block_support(block, spec.ell)
        if support is None:
            raise ValueError(f"block {i} is not the boundary of a simplex")
        for word in _words_free_on(set(support), n):
            faces = tuple(sorted(boundary_faces(Face(Family.CUBE, word))))
            blocks.append(Block(faces, f"subcube {word}"))
    return FactorizationCertificate(out_spec, tuple(blocks))


def _simplex_block_support(block: Block, ell: int) -> tuple[int, ...] | None:
    verts = sorted({v for f in block.faces for v in f.data})
    if len(verts) != ell + 2:
        return None
    want = set(itertools.combinations(verts, ell + 1))
    have = [f.data for f in block.faces]
    if len(have) != len(want) or set(have) != want:
        return None
    return tuple(verts)


def simplex_factorization(n: int, ell: int, budget: SearchBudget = UNLIMITED) -> FactorizationCertificate:
    if not 1 <= ell < n:
        raise ValueError(f"need 1 <= ell < n, got n={n}, ell={ell}")
    return simplex_factorization_from_design(obtain_design(n + 1, ell + 2, ell + 1, budget))


def cube_factorization(n: int, ell: int, budget: SearchBudget = UNLIMITED) -> FactorizationCertificate:
    """Design on ``n`` points -> simplex factorization -> cube factorization.

    Raises ``InfeasibleParameters`` when evenness fails or no ``(n, ell+1,
    ell)`` design exists by divisibility, and ``UnsupportedConstruction``
    when none is found within ``budget``.
    """
    if not 1 <= ell < n:
        raise ValueError(f"need 1 <= ell < n, got n={n}, ell={ell}")
    if ridge_multiplicity(SkeletonSpec(Family.CUBE, n, ell)) % 2:
        raise InfeasibleParameters(f"cube n={n} l={ell} is not even: each ridge lies on {n - ell + 1} faces")
    design = obtain_design(n, ell + 1, ell, budget)
    return exponentiate_factorization(simplex_factorization_from_design(design))


def construct(spec: SkeletonSpec, budget: SearchBudget = UNLIMITED) -> FactorizationCertificate:
    if spec.family is Family.CROSS:
        return cross_factorization(spec.n, spec.ell)
    if spec.family is Family.SIMPLEX:
        return simplex_factorization(spec.n, spec.ell, budget)
    return cube_factorization(spec.n, spec.ell, budget)


@dataclass
class SmallDecision:
    status: CoverStatus
    certificate: FactorizationCertificate | None
    nodes_expanded: int
    # cube verdicts only concern blocks that are boundaries of subcubes
    scope: str


def candidate_blocks(spec: SkeletonSpec) -> list[Block]:
    """Every canonical-sphere block sitting in standard position in ``spec``."""
    n, ell = spec.n, spec.ell
    if spec.family is Family.SIMPLEX:
        return [
            Block(tuple(Face(Family.SIMPLEX, s) for s in itertools.combinations(vs, ell + 1)))
            for vs in itertools.combinations(range(n + 1), ell + 2)
        ]
    if spec.family is Family.CROSS:
        return list(cross_factorization(n, ell).blocks) if ell >= 1 else []
    words = sorted(_words_with_stars(n, ell + 1))
    return [Block(tuple(sorted(boundary_faces(Face(Family.CUBE, w)))), f"subcube {w}") for w in words]


def _words_with_stars(n: int, stars: int) -> list[str]:
    out = []
    for free in itertools.combinations(range(n), stars):
        out.extend(_words_free_on(set(free), n))
    return out


def decide_factorable_small(spec: SkeletonSpec, budget: SearchBudget = UNLIMITED) -> SmallDecision:
    """Exhaustive exact cover of the ``ell``-faces by standard-position spheres.

    ``Infeasible`` proves there is no factorization using those blocks; for
    cubes that means no factorization into subcube boundaries.
    """
    faces = enumerate_faces(spec)
    index = {f: i for i, f in enumerate(faces)}
    blocks = candidate_blocks(spec)
    problem = CoverProblem(len(faces), [(i, tuple(index[f] for f in b.faces)) for i, b in enumerate(blocks)])
    outcome = solve_exact_cover(problem, budget)
    cert = None
    if outcome.status is CoverStatus.SOLVED:
        cert = FactorizationCertificate(spec, tuple(blocks[i] for i in outcome.solution))
    scope = "subcube-block factorability" if spec.family is Family.CUBE else "canonical-block factorability"
    return SmallDecision(outcome.status, cert, outcome.nodes_expanded, scope)
