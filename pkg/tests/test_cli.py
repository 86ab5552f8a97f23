import subprocess
import sys

import pytest

from sphere_factor.cli import main
from sphere_factor.designs import construct_sts, figure_sqs8
from sphere_factor.formats import parse_certificate, parse_design, serialize_design
from sphere_factor.verify import verify_certificate


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,code,verdict",
    [
        (("cube", 8, 3), 0, "FactorableConstructive"),
        (("simplex", 5, 1), 2, "NotFactorable"),
        (("cross", 9, 4), 0, "FactorableConstructive"),
        (("cube", 6, 3), 3, "Unknown"),
        (("simplex", 21, 2), 0, "FactorableExistential"),
    ],
)
def test_feasibility(capsys, argv, code, verdict):
    got, out, _ = run(capsys, "feasibility", *argv)
    assert got == code
    assert verdict in out


def test_feasibility_with_exception_table(capsys, tmp_path):
    table = tmp_path / "x.txt"
    table.write_text("# k l v\n4 3 22\n")
    code, out, _ = run(capsys, "feasibility", "simplex", 21, 2, "--exceptions", table)
    assert code == 2 and "exception-table" in out


@pytest.mark.parametrize("argv", [("feasibility", "cube", 3, 3), ("feasibility", "prism", 3, 1),
                                  ("construct", "cube", 3), ("construct", "cube", 4, 2, "--max-nodes", -1),
                                  ("search-design", 3, 4, 2), ("bogus",), ()])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main([str(a) for a in argv])
        raise SystemExit(code)
    assert exc.value.code == 64


@pytest.mark.parametrize("argv,blocks", [(("simplex", 7, 2), 14), (("cube", 7, 2), 112), (("cross", 3, 1), 3)])
def test_construct(capsys, argv, blocks):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0
    cert = parse_certificate(out)
    assert len(cert.blocks) == blocks
    assert verify_certificate(cert).valid


def test_construct_exit_codes(capsys):
    assert run(capsys, "construct", "cube", 3, 1)[0] == 2
    assert run(capsys, "construct", "simplex", 5, 1)[0] == 2
    code, _, err = run(capsys, "construct", "simplex", 21, 2, "--max-nodes", 50)
    assert code == 3 and "not constructed" in err
    code, _, err = run(capsys, "construct", "cube", 40, 3)
    assert code == 3 and "--max-faces" in err


def test_construct_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "construct", "cube", 8, 3, "-o", a)[0] == 0
    assert run(capsys, "construct", "cube", 8, 3, "-o", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify(capsys, tmp_path):
    path = tmp_path / "fig.txt"
    run(capsys, "construct", "simplex", 7, 2, "-o", path)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0 and out.startswith("valid")

    lines = path.read_text().splitlines()
    assert lines[2] == "0,1,2"
    del lines[2]
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", path)
    assert code == 1
    assert "face 0,1,2: uncovered" in out

    path.write_text("this is not a certificate\n")
    code, _, err = run(capsys, "verify", path)
    assert code == 65 and "line 1" in err

    assert run(capsys, "verify", tmp_path / "missing.txt")[0] == 66


def test_verify_design_file(capsys, tmp_path):
    path = tmp_path / "d.txt"
    path.write_text(serialize_design(figure_sqs8(printed=True)))
    code, out, _ = run(capsys, "verify", path)
    assert code == 1 and "subset 0 1 2: covered 0 times" in out
    path.write_text(serialize_design(figure_sqs8()))
    assert run(capsys, "verify", path)[0] == 0


def test_search_design(capsys, tmp_path):
    code, out, _ = run(capsys, "search-design", 8, 4, 3)
    assert code == 0
    d = parse_design(out)
    assert len(d.blocks) == 14
    assert run(capsys, "search-design", 6, 3, 2)[0] == 2
    assert run(capsys, "search-design", 14, 4, 3, "--max-nodes", 10)[0] == 3


def test_exponentiate(capsys, tmp_path):
    fig = tmp_path / "fig.txt"
    fig.write_text(serialize_design(figure_sqs8()))
    out_path = tmp_path / "cube.txt"
    code, _, _ = run(capsys, "exponentiate", fig, out_path)
    assert code == 0
    cert = parse_certificate(out_path.read_text())
    assert len(cert.blocks) == 224 and verify_certificate(cert).valid

    sts = tmp_path / "sts7.txt"
    sts.write_text(serialize_design(construct_sts(7)))
    code, out, _ = run(capsys, "exponentiate", sts)
    assert code == 0 and len(parse_certificate(out).blocks) == 112

    cert_path = tmp_path / "s72.txt"
    run(capsys, "construct", "simplex", 7, 2, "-o", cert_path)
    code, out, _ = run(capsys, "exponentiate", cert_path)
    assert code == 0 and len(parse_certificate(out).blocks) == 224

    bad = tmp_path / "bad.txt"
    bad.write_text(serialize_design(figure_sqs8(printed=True)))
    assert run(capsys, "exponentiate", bad)[0] == 1

    cross = tmp_path / "cross.txt"
    run(capsys, "construct", "cross", 3, 1, "-o", cross)
    assert run(capsys, "exponentiate", cross)[0] == 1


def test_pipeline_matrix(capsys, tmp_path):
    cases = [("cross", n, ell) for n in range(2, 7) for ell in range(1, n)]
    cases += [("simplex", n, 1) for n in (2, 6, 8, 12, 14)] + [("simplex", n, 2) for n in (3, 7, 9, 13, 15)]
    cases += [("cube", n, 1) for n in (2, 4, 6, 8, 10)] + [("cube", n, 2) for n in (3, 7, 9)]
    cases += [("cube", n, 3) for n in (4, 8, 10)]
    for family, n, ell in cases:
        path = tmp_path / f"{family}{n}{ell}.txt"
        assert run(capsys, "construct", family, n, ell, "-o", path)[0] == 0, (family, n, ell)
        assert run(capsys, "verify", path)[0] == 0, (family, n, ell)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sphere_factor", "feasibility", "cube", "8", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "FactorableConstructive" in res.stdout
