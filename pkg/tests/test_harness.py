"""The verification harness: suites, the CLI, serialization, fault injection.

The JSON report must be byte-identical across runs with the same suites and
seed, a deliberately corrupted frame must surface as failing checks with
witnesses (never as a crash), and the exit codes must follow the contract
0 = green, 1 = red, 2 = usage error.
"""

import io
import json
import contextlib

import pytest

from spin7lab.cayley import build_omega, perturb_rank_one
from spin7lab.exterior.forms import KForm, Vector
from spin7lab.exterior.scalars import FieldScalar
from spin7lab.harness import (SUITE_NAMES, CheckResult, RunConfig,
                              export_form, main, run, run_all_suites,
                              run_suite)
from spin7lab.invariant.bryant_salamon import build_bryant_salamon
from spin7lab.invariant.chamber import ChamberForm
from spin7lab.invariant.liealg import build_lie_frame


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


# -- suites ------------------------------------------------------------------

def test_suite_names_are_canonical():
    assert SUITE_NAMES == ("basics", "decomposition", "classify",
                           "bryant-salamon", "perturb")


def test_every_suite_passes():
    for name in SUITE_NAMES:
        results = run_suite(name, seed=0)
        assert results, name
        for r in results:
            assert isinstance(r, CheckResult)
            assert r.passed, (name, r.name, r.detail)


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_run_all_suites_preserves_canonical_order():
    results = run_all_suites(("perturb", "basics"), seed=0)
    assert list(results.keys()) == ["basics", "perturb"]


def test_check_results_are_seed_stable():
    a = [r.to_record(zero_timings=True) for r in run_suite("basics", seed=5)]
    b = [r.to_record(zero_timings=True) for r in run_suite("basics", seed=5)]
    assert a == b


# -- fault injection ------------------------------------------------------------

def corrupted_frame():
    frame = build_lie_frame()
    mutated = [[[c for c in row] for row in plane]
               for plane in frame.structure]
    mutated[3][4][5] = FieldScalar(3)  # [A4, A5] = 3 A6 is wrong
    return frame.with_structure(tuple(tuple(tuple(r) for r in p)
                                      for p in mutated))


def test_corrupted_frame_fails_with_witnesses():
    results = run_suite("bryant-salamon", seed=0, frame=corrupted_frame())
    failed = [r for r in results if not r.passed]
    assert failed
    for r in failed:
        assert "witness" in r.detail, r.name
    # closedness of the 4-form is among the broken checks
    assert any(r.name == "phi-closedness" for r in failed)


def test_corrupted_frame_fails_perturbation_suite():
    results = run_suite("perturb", seed=0, frame=corrupted_frame())
    assert any(not r.passed for r in results)


# -- RunConfig and run() -----------------------------------------------------------

def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(suites=("basics", "bogus"))
    with pytest.raises(ValueError):
        RunConfig(format="yaml")


def test_run_writes_report_to_file(tmp_path):
    out = tmp_path / "report.json"
    config = RunConfig(suites=("basics",), output=str(out))
    assert run(config) == 0
    report = json.loads(out.read_text())
    assert report["summary"]["failed"] == 0
    assert report["stabilizer_dim"] == 21
    assert report["image_dim"] == 42


# -- CLI ---------------------------------------------------------------------------

def test_cli_verify_json_is_deterministic():
    code1, out1 = run_cli(["verify", "--suite", "basics",
                           "--suite", "perturb", "--seed", "7"])
    code2, out2 = run_cli(["verify", "--suite", "perturb",
                           "--suite", "basics", "--seed", "7"])
    assert code1 == code2 == 0
    assert out1 == out2  # canonical order, zeroed timings, sorted keys


def test_cli_report_shape():
    code, out = run_cli(["verify", "--suite", "classify"])
    assert code == 0
    report = json.loads(out)
    assert report["seed"] == 0
    assert report["suites"] == ["classify"]
    assert report["admissible_diagrams"] == [[2, 1, 1, 1, 1, 1, 1],
                                             [1, 1, 1, 1, 1, 1, 1, 1]]
    assert report["summary"]["total"] == len(report["checks"])
    assert all(c["duration_millis"] == 0 for c in report["checks"])


def test_cli_timings_flag_restores_durations():
    code, out = run_cli(["verify", "--suite", "basics", "--timings"])
    assert code == 0
    report = json.loads(out)
    assert any(c["duration_millis"] > 0 for c in report["checks"])


def test_cli_text_format():
    code, out = run_cli(["verify", "--suite", "basics", "--format", "text"])
    assert code == 0
    assert "checks passed" in out
    assert "cayley-normalization" in out


def test_cli_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_cli_reports_failure_exit_code(monkeypatch):
    import spin7lab.harness.cli as cli

    def fake_run_all(suites, seed=0):
        return {"basics": [CheckResult(name="doomed", passed=False,
                                       detail={"witness": "x"},
                                       duration_millis=1)]}

    monkeypatch.setattr(cli, "run_all_suites", fake_run_all)
    code, out = run_cli(["verify", "--suite", "basics"])
    assert code == 1
    report = json.loads(out)
    assert report["summary"]["failed"] == 1


# -- export ---------------------------------------------------------------------------

def test_export_omega_round_trip(tmp_path):
    path = tmp_path / "omega.json"
    code, _ = run_cli(["export", "--form", "omega", "--out", str(path)])
    assert code == 0
    loaded = KForm.from_record(json.loads(path.read_text()))
    assert loaded == build_omega().omega


def test_export_phi_round_trip(tmp_path):
    path = tmp_path / "phi.json"
    code, _ = run_cli(["export", "--form", "phi", "--out", str(path)])
    assert code == 0
    loaded = ChamberForm.from_record(json.loads(path.read_text()))
    assert loaded == build_bryant_salamon().phi


def test_export_rank_one_round_trip(tmp_path):
    path = tmp_path / "rank_one.json"
    code, _ = run_cli(["export", "--form", "rank-one",
                       "--v", "0,0,0,0,0,0,1,0", "--w", "0,0,0,0,0,0,0,1",
                       "--t", "5/7", "--out", str(path)])
    assert code == 0
    loaded = KForm.from_record(json.loads(path.read_text()))
    assert loaded == perturb_rank_one(Vector.basis(7), Vector.basis(8), "5/7")


def test_export_rank_one_validates_orthogonality(tmp_path):
    path = tmp_path / "bad.json"
    code, _ = run_cli(["export", "--form", "rank-one",
                       "--v", "1,0,0,0,0,0,0,0", "--w", "1,0,0,0,0,0,0,0",
                       "--out", str(path)])
    assert code == 2
    assert not path.exists()


def test_export_rank_one_requires_vectors():
    code, _ = run_cli(["export", "--form", "rank-one"])
    assert code == 2


def test_export_vector_parsing():
    code, _ = run_cli(["export", "--form", "rank-one",
                       "--v", "1,2,3", "--w", "0,0,0,0,0,0,0,1"])
    assert code == 2


def test_export_function_returns_record(tmp_path):
    path = tmp_path / "omega2.json"
    record = export_form("omega", str(path))
    assert record["degree"] == 4
    assert len(record["terms"]) == 14
