import pytest

from sphere_factor.designs import construct_sts, figure_sqs8
from sphere_factor.errors import ParseError
from sphere_factor.factorize import cross_factorization, cube_factorization, simplex_factorization_from_design
from sphere_factor.formats import (
    parse_certificate,
    parse_design,
    serialize_certificate,
    serialize_design,
    sniff,
)


@pytest.mark.parametrize(
    "cert",
    [
        simplex_factorization_from_design(figure_sqs8()),
        cross_factorization(4, 2),
        cube_factorization(7, 2),
        simplex_factorization_from_design(construct_sts(9)),
    ],
    ids=["figure", "cross42", "cube72", "sts9"],
)
def test_certificate_round_trip(cert):
    text = serialize_certificate(cert)
    parsed = parse_certificate(text)
    assert parsed == cert
    assert serialize_certificate(parsed) == text


def test_certificate_layout():
    text = serialize_certificate(cross_factorization(3, 1))
    lines = text.splitlines()
    assert lines[0] == "FACTORIZATION family=cross n=3 l=1 blocks=3"
    assert lines[1] == "BLOCK axes 1 2"
    assert lines[2:6] == ["+1,+2", "+1,-2", "-1,+2", "-1,-2"]


def test_certificate_comments_and_unlabelled_blocks():
    text = """
    # a hand-written certificate
    FACTORIZATION family=simplex n=3 l=1 blocks=1   # K4 is not factorable, but parses
    BLOCK
    0,1
    0,2  # trailing comment

    1,2
    """
    cert = parse_certificate(text)
    assert cert.blocks[0].label is None
    assert [f.encode() for f in cert.blocks[0].faces] == ["0,1", "0,2", "1,2"]


@pytest.mark.parametrize(
    "text,line",
    [
        ("garbage\n", 1),
        ("FACTORIZATION family=simplex n=3 l=1\n", 1),
        ("FACTORIZATION family=tetra n=3 l=1 blocks=0\n", 1),
        ("FACTORIZATION family=simplex n=3 l=4 blocks=0\n", 1),
        ("FACTORIZATION family=simplex n=3 l=1 blocks=1\n0,1\n", 2),
        ("FACTORIZATION family=simplex n=3 l=1 blocks=1\nBLOCK\n0,x\n", 3),
        ("FACTORIZATION family=cross n=3 l=1 blocks=1\nBLOCK\n1,2\n", 3),
        ("FACTORIZATION family=cube n=3 l=1 blocks=2\nBLOCK\n**0\n", 1),
        ("", None),
    ],
)
def test_certificate_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_certificate(text)
    assert err.value.line == line


def test_design_round_trip():
    d = construct_sts(13)
    text = serialize_design(d)
    assert text.startswith("DESIGN v=13 k=3 t=2\nBLOCK ")
    back = parse_design(text)
    assert (back.v, back.k, back.t, back.blocks) == (d.v, d.k, d.t, d.blocks)


def test_design_parse_sorts_points_and_skips_comments():
    d = parse_design("# x\nDESIGN v=4 k=4 t=3\nBLOCK 3 2 1 0  # reversed\n")
    assert d.blocks == [(0, 1, 2, 3)]


@pytest.mark.parametrize(
    "text",
    ["DESIGN v=4 k=4\n", "DESIGN v=4 k=4 t=3\nBLOK 0 1 2 3\n", "DESIGN v=4 k=4 t=3\nBLOCK 0 1 a 3\n", "BLOCK 1\n"],
)
def test_design_parse_errors(text):
    with pytest.raises(ParseError):
        parse_design(text)


def test_sniff():
    assert sniff("# c\n\nDESIGN v=1 k=1 t=0\n") == "design"
    assert sniff("FACTORIZATION family=cube n=2 l=1 blocks=1") == "certificate"
    assert sniff("nonsense") is None
    assert sniff("") is None
