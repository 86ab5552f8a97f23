"""Certificate checker.

Relies only on face enumeration from :mod:`polytope` and on its own
canonical-form tests; nothing here reuses constructor code.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polytope import EvennessReport, Face, Family, enumerate_faces, is_even_skeleton


@dataclass
class VerificationReport:
    coverage_ok: bool
    bad_faces: list[tuple[Face, int]] = field(default_factory=list)
    foreign_faces: list[tuple[int, Face]] = field(default_factory=list)
    blocks_ok: bool = True
    bad_blocks: list[tuple[int, str]] = field(default_factory=list)
    evenness: EvennessReport | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.coverage_ok and self.blocks_ok


def block_is_canonical(family: Family, ell: int, block) -> tuple[bool, str]:
    """Is ``block`` the boundary of an ``(ell+1)``-dimensional member of ``family``?"""
    faces = list(block.faces)
    if not faces:
        return False, "empty block"
    for f in faces:
        if f.family is not family:
            return False, f"face {f} is not a {family.value} face"
        if f.level != ell:
            return False, f"face {f} has level {f.level}, expected {ell}"
    if len(set(faces)) != len(faces):
        return False, "block repeats a face"

    if family is Family.SIMPLEX:
        verts = sorted({v for f in faces for v in f.data})
        if len(verts) != ell + 2:
            return False, f"vertex union has size {len(verts)}, expected {ell + 2}"
        if len(faces) != ell + 2:
            return False, f"{len(faces)} faces, expected {ell + 2}"
        return True, "simplex boundary"

    if family is Family.CROSS:
        axes = sorted({abs(x) for f in faces for x in f.data})
        if len(axes) != ell + 1:
            return False, f"axis union has size {len(axes)}, expected {ell + 1}"
        # distinct faces on exactly these axes: count forces all sign patterns
        if len(faces) != 2 ** (ell + 1):
            return False, f"{len(faces)} faces, expected {2 ** (ell + 1)}"
        return True, "cross-polytope boundary"

    lengths = {len(f.data) for f in faces}
    if len(lengths) != 1:
        return False, "cube words of different lengths"
    # merge: keep a digit where all faces agree on it, else star
    merged = "".join(
        col[0] if len(set(col)) == 1 and col[0] != "*" else "*" for col in zip(*(f.data for f in faces))
    )
    if merged.count("*") != ell + 1:
        return False, f"merged word {merged} has {merged.count('*')} stars, expected {ell + 1}"
    want = set()
    for i, ch in enumerate(merged):
        if ch == "*":
            want.add(merged[:i] + "0" + merged[i + 1:])
            want.add(merged[:i] + "1" + merged[i + 1:])
    have = {f.data for f in faces}
    if have != want or len(faces) != len(want):
        return False, f"faces are not the facets of subcube {merged}"
    return True, f"boundary of subcube {merged}"


def verify_certificate(cert) -> VerificationReport:
    spec = cert.spec
    expected = enumerate_faces(spec)
    counts = dict.fromkeys(expected, 0)
    foreign = []
    for bi, block in enumerate(cert.blocks):
        for f in block.faces:
            if f in counts:
                counts[f] += 1
            else:
                foreign.append((bi, f))
    bad_faces = [(f, c) for f, c in counts.items() if c != 1]

    bad_blocks = []
    for bi, block in enumerate(cert.blocks):
        ok, reason = block_is_canonical(spec.family, spec.ell, block)
        if not ok:
            bad_blocks.append((bi, reason))

    report = VerificationReport(
        coverage_ok=not bad_faces and not foreign,
        bad_faces=bad_faces,
        foreign_faces=foreign,
        blocks_ok=not bad_blocks,
        bad_blocks=bad_blocks,
    )
    if spec.ell >= 1:
        report.evenness = is_even_skeleton(spec)
        if not report.evenness.is_even:
            report.notes.append(
                f"skeleton is not even (multiplicity {report.evenness.multiplicity}); no factorization can exist"
            )
    return report

