import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import ridge_counts
from sphere_factor.errors import ParseError
from sphere_factor.polytope import (
    Face,
    Family,
    SkeletonSpec,
    boundary_faces,
    canonical_sphere_faces,
    enumerate_faces,
    face_count,
    is_even_skeleton,
)

SIMPLEX, CROSS, CUBE = Family.SIMPLEX, Family.CROSS, Family.CUBE

small_specs = [SkeletonSpec(f, n, ell) for f in Family for n in range(1, 7) for ell in range(n)]


@pytest.mark.parametrize(
    "family,n,ell,count",
    [(SIMPLEX, 7, 2, 56), (CUBE, 3, 2, 6), (CROSS, 3, 1, 12)],
)
def test_enumerate_examples(family, n, ell, count):
    assert len(enumerate_faces(SkeletonSpec(family, n, ell))) == count


@pytest.mark.parametrize(
    "family,n,ell,count",
    [(CUBE, 8, 3, 1792), (SIMPLEX, 3, 2, 4), (CROSS, 4, 3, 16)],
)
def test_face_count_examples(family, n, ell, count):
    assert face_count(SkeletonSpec(family, n, ell)) == count


@pytest.mark.parametrize("n,ell", [(0, 0), (3, 3), (3, 5), (2, -1)])
def test_bad_specs_rejected(n, ell):
    with pytest.raises(ValueError):
        SkeletonSpec(SIMPLEX, n, ell)


@pytest.mark.parametrize("spec", [SkeletonSpec(f, n, ell) for f in Family for n in range(1, 9) for ell in range(n)],
                         ids=str)
def test_face_count_matches_enumeration(spec):
    faces = enumerate_faces(spec)
    assert face_count(spec) == len(faces)
    assert all(a < b for a, b in zip(faces, faces[1:]))
    assert all(f.level == spec.ell for f in faces)


def test_cross_faces_have_no_antipodal_pair():
    for f in enumerate_faces(SkeletonSpec(CROSS, 5, 3)):
        axes = [abs(x) for x in f.data]
        assert len(set(axes)) == len(axes)


def test_boundary_examples():
    assert boundary_faces(Face.simplex([0, 1, 2])) == [Face.simplex(s) for s in ([0, 1], [0, 2], [1, 2])]
    assert [f.encode() for f in boundary_faces(Face.cube("*1*"))] == ["01*", "11*", "*10", "*11"]
    assert boundary_faces(Face.cross([1, -3])) == [Face.cross([1]), Face.cross([-3])]
    assert boundary_faces(Face.simplex([4])) == []


@pytest.mark.parametrize(
    "family,n,ell,even,mult",
    [
        (SIMPLEX, 7, 2, True, 6),
        (CUBE, 3, 1, False, 3),
        # direct count: a 2-face on 3 axes extends by 2 spare axes x 2 signs
        (CROSS, 5, 3, True, 4),
    ],
)
def test_evenness_examples(family, n, ell, even, mult):
    rep = is_even_skeleton(SkeletonSpec(family, n, ell))
    assert (rep.is_even, rep.multiplicity, rep.positive) == (even, mult, True)


@pytest.mark.parametrize("spec", [s for s in small_specs if s.ell >= 1], ids=str)
def test_evenness_matches_direct_count(spec):
    counts = ridge_counts(enumerate_faces(spec), boundary_faces)
    ridges = enumerate_faces(SkeletonSpec(spec.family, spec.n, spec.ell - 1))
    assert set(counts) == set(ridges)
    assert set(counts.values()) == {is_even_skeleton(spec).multiplicity}


@pytest.mark.parametrize("ell", range(0, 6))
def test_canonical_sphere_sizes(ell):
    assert len(canonical_sphere_faces(SIMPLEX, ell)) == ell + 2
    assert len(canonical_sphere_faces(CROSS, ell)) == 2 ** (ell + 1)
    assert len(canonical_sphere_faces(CUBE, ell)) == 2 * (ell + 1)


def test_canonical_sphere_examples():
    assert [f.encode() for f in canonical_sphere_faces(SIMPLEX, 1)] == ["0,1", "0,2", "1,2"]
    assert [f.encode() for f in canonical_sphere_faces(CROSS, 1)] == ["+1,+2", "+1,-2", "-1,+2", "-1,-2"]
    assert len(canonical_sphere_faces(CUBE, 2)) == 6


@pytest.mark.parametrize(
    "family,text",
    [(SIMPLEX, "0,2,4"), (CROSS, "+1,-3,+4"), (CUBE, "01*0*")],
)
def test_encoding_round_trip(family, text):
    f = Face.parse(family, text)
    assert f.encode() == text
    assert Face.parse(family, f.encode()) == f


@pytest.mark.parametrize(
    "family,text",
    [(SIMPLEX, "0,0"), (SIMPLEX, "a"), (CROSS, "1,-3"), (CROSS, "+1,-1"), (CROSS, "+0"), (CUBE, "01x"), (CUBE, "")],
)
def test_bad_encodings(family, text):
    with pytest.raises(ParseError):
        Face.parse(family, text)


def test_cross_parse_canonicalizes_order():
    assert Face.parse(CROSS, "-3,+1").encode() == "+1,-3"


@given(st.sets(st.integers(0, 12), min_size=2, max_size=6))
def test_simplex_boundary_is_facets(verts):
    f = Face.simplex(verts)
    bd = boundary_faces(f)
    assert len(bd) == len(verts)
    assert all(set(g.data) < set(f.data) and g.level == f.level - 1 for g in bd)


@given(st.text(alphabet="01*", min_size=1, max_size=8))
def test_cube_boundary_count(word):
    bd = boundary_faces(Face.cube(word))
    stars = word.count("*")
    assert len(bd) == (2 * stars if stars else 0)
    assert len(set(bd)) == len(bd)


def test_cube_order_is_ascii():
    words = [f.data for f in enumerate_faces(SkeletonSpec(CUBE, 2, 1))]
    assert words == sorted(words) == ["*0", "*1", "0*", "1*"]


def test_enumeration_is_deterministic():
    spec = SkeletonSpec(CROSS, 4, 2)
    assert enumerate_faces(spec) == enumerate_faces(spec)
    assert list(itertools.islice((f.encode() for f in enumerate_faces(spec)), 3)) == ["+1,+2,+3", "+1,+2,-3", "+1,+2,+4"]
