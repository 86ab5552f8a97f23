"""Faces of simplex, cross-polytope and cube skeleta.

Face models:

* simplex -- sorted tuple of vertex labels in ``0..n``;
* cross-polytope -- signed axes ``+i`` / ``-i`` (``1 <= i <= n``), sorted by
  axis, at most one sign per axis;
* cube -- a word over ``0``, ``1``, ``*`` of length ``n``; stars mark the free
  coordinates.

Canonical order is lexicographic on the vertex tuple, on the
``(axis, sign)`` sequence with ``+`` before ``-``, and on the word (ASCII, so
``*`` sorts before the digits).
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from math import comb

from .errors import ParseError


class Family(enum.Enum):
    SIMPLEX = "simplex"
    CROSS = "cross"
    CUBE = "cube"

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown family {text!r}; expected simplex, cross or cube") from None


@dataclass(frozen=True)
class SkeletonSpec:
    """The ``ell``-skeleton of the ``n``-dimensional member of ``family``."""

    family: Family
    n: int
    ell: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be at least 1, got n={self.n}")
        if not 0 <= self.ell < self.n:
            raise ValueError(f"skeleton level must satisfy 0 <= ell < n, got ell={self.ell}, n={self.n}")

    def __str__(self):
        return f"{self.family.value} n={self.n} l={self.ell}"


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class Face:
    family: Family
    data: tuple | str

    @classmethod
    def simplex(cls, verts) -> "Face":
        vs = tuple(sorted(int(v) for v in verts))
        if not vs:
            raise ValueError("simplex face needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in {vs}")
        if vs[0] < 0:
            raise ValueError(f"negative vertex in {vs}")
        return cls(Family.SIMPLEX, vs)

    @classmethod
    def cross(cls, signed) -> "Face":
        """``signed`` holds nonzero ints; the sign of each is the vertex sign."""
        vs = tuple(sorted((int(x) for x in signed), key=lambda x: (abs(x), x < 0)))
        if not vs:
            raise ValueError("cross face needs at least one vertex")
        if 0 in vs:
            raise ValueError("axis 0 is not allowed; axes are 1-based")
        axes = [abs(x) for x in vs]
        if len(set(axes)) != len(axes):
            raise ValueError(f"antipodal or repeated vertices in {vs}")
        return cls(Family.CROSS, vs)

    @classmethod
    def cube(cls, word: str) -> "Face":
        if not word or set(word) - set("01*"):
            raise ValueError(f"cube word must be a non-empty string over 0, 1, *: {word!r}")
        return cls(Family.CUBE, word)

    @property
    def level(self) -> int:
        if self.family is Family.CUBE:
            return self.data.count("*")
        return len(self.data) - 1

    def sort_key(self):
        if self.family is Family.CROSS:
            return tuple((abs(x), x < 0) for x in self.data)
        return self.data

    def __lt__(self, other):
        if not isinstance(other, Face):
            return NotImplemented
        if self.family is not other.family:
            return self.family.value < other.family.value
        return self.sort_key() < other.sort_key()

    def encode(self) -> str:
        if self.family is Family.SIMPLEX:
            return ",".join(str(v) for v in self.data)
        if self.family is Family.CROSS:
            return ",".join(f"{'+' if x > 0 else '-'}{abs(x)}" for x in self.data)
        return self.data

    @classmethod
    def parse(cls, family: Family, text: str) -> "Face":
        text = text.strip()
        try:
            if family is Family.SIMPLEX:
                return cls.simplex(_parse_ints(text))
            if family is Family.CROSS:
                parts = [p.strip() for p in text.split(",")]
                if any(not p or p[0] not in "+-" for p in parts):
                    raise ValueError(f"cross vertex needs an explicit sign: {text!r}")
                return cls.cross(_parse_ints(text))
            return cls.cube(text)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __str__(self):
        return self.encode()

    def __repr__(self):
        return f"Face.{self.family.name.lower()}({self.encode()!r})"


def _parse_ints(text: str) -> list[int]:
    parts = text.split(",")
    out = []
    for p in parts:
        p = p.strip()
        if not p.lstrip("+-").isdigit():
            raise ValueError(f"not an integer: {p!r}")
        out.append(int(p))
    return out


def enumerate_faces(spec: SkeletonSpec) -> list[Face]:
    """Every ``ell``-face of the skeleton, once each, in canonical order."""
    n, ell = spec.n, spec.ell
    if spec.family is Family.SIMPLEX:
        return [Face(Family.SIMPLEX, c) for c in itertools.combinations(range(n + 1), ell + 1)]
    if spec.family is Family.CROSS:
        faces = [
            Face(Family.CROSS, tuple(a * s for a, s in zip(axes, signs)))
            for axes in itertools.combinations(range(1, n + 1), ell + 1)
            for signs in itertools.product((1, -1), repeat=ell + 1)
        ]
        faces.sort()
        return faces
    words = []
    for stars in itertools.combinations(range(n), ell):
        fixed = [i for i in range(n) if i not in stars]
        for bits in itertools.product("01", repeat=len(fixed)):
            w = ["*"] * n
            for i, b in zip(fixed, bits):
                w[i] = b
            words.append("".join(w))
    words.sort()
    return [Face(Family.CUBE, w) for w in words]


def face_count(spec: SkeletonSpec) -> int:
    n, ell = spec.n, spec.ell
    if spec.family is Family.SIMPLEX:
        return comb(n + 1, ell + 1)
    if spec.family is Family.CROSS:
        return comb(n, ell + 1) * 2 ** (ell + 1)
    return comb(n, ell) * 2 ** (n - ell)


def boundary_faces(f: Face) -> list[Face]:
    """Facets of ``f`` (level ``ell - 1``); empty for vertices."""
    if f.level == 0:
        return []
    if f.family is Family.CUBE:
        w = f.data
        out = []
        for i, ch in enumerate(w):
            if ch == "*":
                out.append(Face(Family.CUBE, w[:i] + "0" + w[i + 1:]))
                out.append(Face(Family.CUBE, w[:i] + "1" + w[i + 1:]))
        return out
    return [Face(f.family, sub) for sub in itertools.combinations(f.data, len(f.data) - 1)]


@dataclass(frozen=True)
class EvennessReport:
    is_even: bool
    positive: bool
    multiplicity: int


def ridge_multiplicity(spec: SkeletonSpec) -> int:
    """Number of ``ell``-faces on each ``(ell-1)``-face."""
    n, ell = spec.n, spec.ell
    if spec.family is Family.CROSS:
        # one new axis out of the n - ell unused ones, with either sign
        return 2 * (n - ell)
    return n - ell + 1


def is_even_skeleton(spec: SkeletonSpec) -> EvennessReport:
    if spec.ell < 1:
        raise ValueError("evenness needs ell >= 1")
    m = ridge_multiplicity(spec)
    return EvennessReport(is_even=m > 0 and m % 2 == 0, positive=m > 0, multiplicity=m)


def canonical_sphere_faces(family: Family, ell: int) -> list[Face]:
    """The ``ell``-faces of the boundary of the ``(ell+1)``-dimensional member."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if family is Family.CUBE:
        return sorted(boundary_faces(Face(Family.CUBE, "*" * (ell + 1))))
    return enumerate_faces(SkeletonSpec(family, ell + 1, ell))


def face_vertices(f: Face) -> frozenset:
    """Vertex set of a face: labels, signed axes, or 0/1 words."""
    if f.family is not Family.CUBE:
        return frozenset(f.data)
    w = f.data
    stars = [i for i, ch in enumerate(w) if ch == "*"]
    out = set()
    for bits in itertools.product("01", repeat=len(stars)):
        v = list(w)
        for i, b in zip(stars, bits):
            v[i] = b
        out.add("".join(v))
    return frozenset(out)
