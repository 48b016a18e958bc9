import json

import pytest

import Cubix


def _run(capsys, *argv):
    code = Cubix.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def test_validate_exit_codes(capsys, fixtures_dir):
    code, report, _ = _run(capsys, "validate", str(fixtures_dir / "square.json"))
    assert code == 0
    assert report["verdicts"] == {"valid": True}
    code, report, _ = _run(capsys, "validate", str(fixtures_dir / "square_broken.json"))
    assert code == 1
    assert report["violation"]["kind"] == "face-face"
    assert report["violation"]["indices"] == [1, 2, 1, 1]
    code, report, _ = _run(capsys, "validate", str(fixtures_dir / "malformed.json"))
    assert code == 2
    assert report is None


def test_invalid_shape_files_report_their_violation(capsys, fixtures_dir):
    code, report, _ = _run(capsys, "homology", str(fixtures_dir / "dangling.json"))
    assert code == 1
    assert report["violation"]["kind"] == "dangling"
    assert report["passed"] is False


def test_homology_report(capsys):
    code, report, _ = _run(capsys, "homology", "torus-□")
    assert code == 0
    assert report["H"] == [{"rank": 1, "torsion": []}, {"rank": 2, "torsion": []}, {"rank": 1, "torsion": []}]
    assert report["certified_through"] == 2
    assert report["details"]["theory"] == "N"
    assert report["command"] == ["homology", "torus-□"]
    assert "wall_time" not in report


def test_output_is_byte_for_byte_deterministic(capsys):
    _, _, first = _run(capsys, "homology", "klein-□", "--coeff", "Z/2")
    _, _, second = _run(capsys, "homology", "klein-□", "--coeff", "Z/2")
    assert first == second


def test_timing_is_opt_in(capsys):
    code, report, _ = _run(capsys, "--timing", "homology", "point-Δ")
    assert code == 0
    assert report["wall_time"] >= 0


def test_compare(capsys):
    code, report, _ = _run(capsys, "compare", "klein-Δ", "klein-□")
    assert code == 0
    assert report["verdicts"] == {"H0": True, "H1": True, "H2": True}
    assert report["H"][1] == {"rank": 1, "torsion": [2]}


def test_derived_oracle(capsys):
    code, report, _ = _run(capsys, "derived", "Z/2", "tensor:Z/2", "--degree", "1", "--method", "oracle")
    assert code == 0
    assert report["H"] == [{"rank": 0, "torsion": [2]}, {"rank": 0, "torsion": [2]}]
    assert report["details"]["method"] == "oracle"



def test_complex_files_on_the_command_line(capsys, fixtures_dir):
    resolution = str(fixtures_dir / "augmented_complex.json")
    code, report, _ = _run(capsys, "validate", resolution)
    assert code == 0
    code, report, _ = _run(capsys, "homology", resolution)
    assert code == 0
    assert report["H"] == [{"rank": 0, "torsion": [2]}]
    assert report["top_upper_bound"] == {"rank": 0, "torsion": []}
    assert report["verdicts"] == {"acyclic": True}
    assert report["details"]["augmented"] is True
    code, report, _ = _run(capsys, "validate", str(fixtures_dir / "bad_augmentation.json"))
    assert code == 1
    assert report["violation"]["kind"] == "augmentation"
    code, report, _ = _run(capsys, "homology", str(fixtures_dir / "bad_complex.json"))
    assert code == 1
    assert report["violation"]["degree"] == 2
    code, report, _ = _run(capsys, "homology", resolution, "--theory", "K")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["derived", "Z/2", "tensor:Z/2"],
    ["homology", "torus-Δ", "--theory", "N"],
    ["homology", "mobius-□"],
    ["homology", "torus-□", "--coeff", "Q"],
    ["derived", "Z/2", "sym2", "--degree", "1"],
])
def test_usage_errors_exit_with_two(capsys, argv):
    code, report, _ = _run(capsys, *argv)
    assert code == 2
    assert report is None


def test_help(capsys):
    assert Cubix.main(["--help"]) == 0
    assert "selftest" in capsys.readouterr().out
