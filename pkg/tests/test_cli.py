import json

import pytest

from hyperforge import cli
from hyperforge import geometry as geo
from hyperforge import presentations as pres
from hyperforge.toroids import ToroidParams, cubic_toroid_presentation


def run(argv):
    return cli.main(argv)


@pytest.fixture()
def toroid_file(tmp_path):
    out = tmp_path / "toroid.json"
    code = run(["build", "toroid", "--n", "3", "--k", "2", "--s", "2",
                "-o", str(out)])
    assert code == 0
    return out


def test_build_toroid(toroid_file):
    g = geo.from_json(toroid_file.read_text())
    assert g.rank == 4
    assert g.type_counts() == (16, 48, 48, 16)


def test_build_is_deterministic(tmp_path, toroid_file):
    again = tmp_path / "again.json"
    assert run(["build", "toroid", "--n", "3", "--k", "2", "--s", "2",
                "-o", str(again)]) == 0
    assert again.read_bytes() == toroid_file.read_bytes()


def test_build_missing_args():
    assert run(["build", "toroid", "--n", "3"]) == 2


def test_build_bad_params():
    assert run(["build", "toroid", "--n", "3", "--k", "3", "--s", "1"]) == 2


def test_build_overflow():
    assert run(["--max-cosets", "10", "build", "toroid",
                "--n", "3", "--k", "2", "--s", "2"]) == 3


def test_build_from_presentation(tmp_path):
    pfile = tmp_path / "pres.json"
    pfile.write_text(pres.to_json(cubic_toroid_presentation(
        ToroidParams(3, 2, 2))))
    out = tmp_path / "geom.json"
    assert run(["build", "coset", "--presentation", str(pfile),
                "-o", str(out)]) == 0
    g = geo.from_json(out.read_text())
    assert g.type_counts() == (16, 48, 48, 16)


def test_build_file_roundtrip(tmp_path, toroid_file):
    out = tmp_path / "copy.json"
    assert run(["build", "file", "--input", str(toroid_file),
                "-o", str(out)]) == 0
    assert geo.from_json(out.read_text()) \
        == geo.from_json(toroid_file.read_text())


def test_build_missing_file():
    assert run(["build", "file", "--input", "/nonexistent.json"]) == 2


def test_check_passing(tmp_path, toroid_file):
    out = tmp_path / "report.json"
    assert run(["check", str(toroid_file),
                "--props", "geom,conn,thin,rc,b1:0:1,b2:0:1",
                "-o", str(out)]) == 0
    report = json.loads(out.read_text())
    assert all(report.values())
    assert set(report) == {"geom", "conn", "thin", "rc", "b1:0:1",
                           "b2:0:1"}


def test_check_failing(tmp_path, toroid_file):
    # the (2,1) pair is not a simple-graph leaf of the toroid
    assert run(["check", str(toroid_file), "--props", "b1:2:1"]) == 1


def test_check_unknown_property(toroid_file):
    assert run(["check", str(toroid_file), "--props", "sparkly"]) == 2


def test_halve(tmp_path, toroid_file):
    out = tmp_path / "halved.json"
    assert run(["halve", str(toroid_file), "--leaf", "0,1",
                "-o", str(out)]) == 0
    h = geo.from_json(out.read_text())
    assert h.rank == 4
    assert sum(h.type_counts()) > 0


def test_halve_bad_leaf(toroid_file):
    assert run(["halve", str(toroid_file), "--leaf", "zero"]) == 2


def test_enumerate(tmp_path):
    pfile = tmp_path / "pres.json"
    pfile.write_text(pres.to_json(pres.coxeter_presentation(
        ((1, 3, 2), (3, 1, 3), (2, 3, 1)))))
    out = tmp_path / "cosets.csv"
    assert run(["enumerate", "--presentation", str(pfile),
                "--subgroup", "1, 2", "-o", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "0,1,2"
    assert len(lines) == 5  # header + 4 cosets


def test_diagram(tmp_path, toroid_file):
    out1 = tmp_path / "d1.dot"
    out2 = tmp_path / "d2.dot"
    assert run(["diagram", str(toroid_file), "-o", str(out1)]) == 0
    assert run(["diagram", str(toroid_file), "-o", str(out2)]) == 0
    text = out1.read_text()
    assert text == out2.read_text()
    assert text.startswith("graph")
    assert 'label="4"' in text


def test_verify_family(tmp_path, capsys):
    out = tmp_path / "family.json"
    assert run(["verify-family", "--n", "3", "--k", "2", "--s", "2",
                "--depth", "1", "-o", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["ok"] is True
    assert report["stages"]["halved"]["order_presentation"] == 384
    shown = capsys.readouterr().out
    assert "ok" in shown


def test_verify_family_bad_params():
    assert run(["verify-family", "--n", "2", "--k", "1", "--s", "3"]) == 2
