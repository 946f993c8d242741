import json

import pytest

from hullprobe import cli
from hullprobe.experiments.grunbaum import GrunbaumAudit
from hullprobe.svgplot import line_plot


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# bound / min-c


def test_bound_auto_c(capsys):
    code, out, _ = run(capsys, "bound", "-d", "2", "--theta", "0.5", "--delta", "0.1")
    assert code == 0
    assert "C = 5.14539146423 (auto-minimal)" in out
    assert "t = 401" in out
    assert "condition" in out and "true" in out
    # theta = 1/d here, so the 500d cross-check line must appear
    assert "t <= 500d: true" in out


def test_bound_explicit_c_and_no_cross_check(capsys):
    code, out, _ = run(capsys, "bound", "-d", "4", "--theta", "0.25", "--delta", "0.1", "-C", "7")
    assert code == 0
    assert "C = 7 (given)" in out
    assert "500d" in out  # theta == 1/d for d=4
    code, out, _ = run(capsys, "bound", "-d", "4", "--theta", "0.3", "--delta", "0.1", "-C", "7")
    assert code == 0
    assert "500d" not in out


def test_bound_usage_errors(capsys):
    code, _, err = run(capsys, "bound", "-d", "2", "--theta", "1.5", "--delta", "0.1")
    assert code == 1
    code, _, err = run(capsys, "bound", "-d", "2", "--theta", "0.5")
    assert code == 1
    code, _, _ = run(capsys, "nonsense")
    assert code == 1


def test_min_c(capsys):
    code, out, _ = run(capsys, "min-c", "-d", "2", "--theta", "0.5", "--delta", "0.1")
    assert code == 0
    assert "min C = 5.14539146423" in out


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "bound", "--help")[0] == 0


# ---------------------------------------------------------------------------
# trial


def test_trial_auto_t_success(capsys, tmp_path):
    out_path = tmp_path / "trial.jsonl"
    code, out, _ = run(
        capsys, "trial", "--body", "cube", "-d", "3", "--theta", "0.5",
        "--auto-t", "--delta", "0.1", "--seed", "42", "--out", str(out_path),
    )
    assert code == 0
    assert "outcome: SUCCESS" in out
    assert "seed = 42" in out
    assert "replay: hullprobe trial --body cube -d 3" in out
    rec = json.loads(out_path.read_text())
    assert rec["success"] is True
    assert rec["seed"] == 42
    assert rec["body"]["kind"] == "cube"


def test_trial_failure_prints_witness(capsys):
    code, out, _ = run(
        capsys, "trial", "--body", "cube", "-d", "2", "--theta", "0.9",
        "-t", "3", "--seed", "1",
    )
    assert code == 0  # a failed trial is a valid outcome, not an error
    assert "outcome: FAILURE" in out
    assert "violated vertex" in out
    assert "witness cap" in out


def test_trial_conflicting_t_flags(capsys):
    code, _, err = run(
        capsys, "trial", "--body", "cube", "-d", "2", "--theta", "0.5",
        "-t", "10", "--auto-t", "--delta", "0.1",
    )
    assert code == 1
    code, _, err = run(capsys, "trial", "--body", "cube", "-d", "2", "--theta", "0.5")
    assert code == 1
    code, _, err = run(capsys, "trial", "--body", "ball", "-d", "2", "--theta", "0.5", "-t", "9")
    assert code == 2  # ball has no vertex list to check against


def test_trial_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("HULLPROBE_SEED", "77")
    code, out, _ = run(capsys, "trial", "--body", "cube", "-d", "2", "--theta", "0.5", "-t", "40")
    assert code == 0
    assert "seed = 77" in out
    monkeypatch.setenv("HULLPROBE_SEED", "not-a-number")
    code, _, err = run(capsys, "trial", "--body", "cube", "-d", "2", "--theta", "0.5", "-t", "40")
    assert code == 1


# ---------------------------------------------------------------------------
# sweep


def test_sweep_csv_and_svg(capsys, tmp_path):
    csv_path = tmp_path / "s.csv"
    svg_path = tmp_path / "s.svg"
    code, out, _ = run(
        capsys, "sweep", "--body", "cube", "-d", "2", "--theta", "0.4,0.6",
        "-t", "20,40", "--trials", "30", "--seed", "5",
        "--out", str(csv_path), "--svg", str(svg_path),
    )
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("# hullprobe sweep:")
    assert lines[1] == "d,theta,t,trials,seed,successes,p_hat,wilson_low,wilson_high"
    assert len(lines) == 2 + 4  # grid of 2 thetas x 2 ts
    svg = svg_path.read_text()
    assert svg.startswith("<svg") and "polyline" in svg


def test_sweep_json_format_to_stdout(capsys):
    code, out, _ = run(
        capsys, "sweep", "--body", "cube", "-d", "2", "--theta", "0.5",
        "-t", "25", "--trials", "30", "--seed", "5", "--format", "json",
    )
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines() if l.startswith("{")]
    assert "config" in lines[0]
    assert lines[1]["trials"] == 30


def test_sweep_empty_grid_is_usage_error(capsys):
    code, _, err = run(capsys, "sweep", "--body", "cube", "-d", "2", "-t", "20")
    assert code == 1
    code, _, err = run(capsys, "sweep", "--body", "cube", "-d", "2", "--theta", "", "-t", "20")
    assert code == 1
    code, _, err = run(capsys, "sweep", "--body", "cube", "-d", "2", "--theta", "0.5")
    assert code == 1


# ---------------------------------------------------------------------------
# grunbaum / vcdim / report


def test_grunbaum_exact_polygon(capsys, tmp_path):
    body_file = tmp_path / "diamond.json"
    body_file.write_text(json.dumps(
        {"kind": "polygon2d", "vertices": [[1, 0], [0, 1], [-1, 0], [0, -1]]}
    ))
    out_file = tmp_path / "g.csv"
    code, out, _ = run(
        capsys, "grunbaum", "--body", str(body_file), "--theta", "0.3",
        "--directions", "40", "--seed", "2", "--out", str(out_file),
    )
    assert code == 0
    assert "violations: 0 of 40 (exact mode)" in out
    lines = out_file.read_text().splitlines()
    assert lines[1] == "index,u0,u1,fraction,ci_low,ci_high,violation"
    assert len(lines) == 2 + 40


def test_grunbaum_violation_exit_code(capsys, monkeypatch):
    fake = GrunbaumAudit(theta=0.0, floor=0.5, exact=True, min_fraction=0.1,
                         violations=1, records=())
    monkeypatch.setattr(cli, "grunbaum_audit", lambda *a, **k: fake)
    code, out, err = run(capsys, "grunbaum", "--body", "cube", "-d", "2")
    assert code == 3
    assert "theorem violation" in err


def test_vcdim(capsys, tmp_path):
    points_file = tmp_path / "square.json"
    points_file.write_text("[[0,0],[1,0],[1,1],[0,1]]")
    code, out, _ = run(capsys, "vcdim", "--points", str(points_file))
    assert code == 0
    assert out.strip() == "3"
    code, _, _ = run(capsys, "vcdim", "--points", str(tmp_path / "missing.json"))
    assert code == 2


def test_report_aggregates_trial_results(capsys, tmp_path):
    recs = tmp_path / "r.jsonl"
    code, _, _ = run(
        capsys, "trial", "--body", "cube", "-d", "2", "--theta", "0.5",
        "-t", "50", "--seed", "8", "--out", str(recs),
    )
    assert code == 0
    code, out, _ = run(capsys, "report", str(recs))
    assert code == 0
    body = [l for l in out.splitlines() if l.startswith("trials,")]
    assert len(body) == 1
    assert body[0].startswith("trials,2,0.5,50,1,")
    code, _, _ = run(capsys, "report", str(tmp_path / "none.jsonl"))
    assert code == 2


# ---------------------------------------------------------------------------
# svg plotting


def test_line_plot_is_deterministic():
    series = [("a", [1, 2, 3], [0.1, 0.5, 0.9]), ("b", [1, 2, 3], [0.2, 0.3, 0.4])]
    one = line_plot(series, title="t", xlabel="x", ylabel="y")
    two = line_plot(series, title="t", xlabel="x", ylabel="y")
    assert one == two
    assert one.startswith("<svg")
    assert one.count("<polyline") == 2
    assert "#1f77b4" in one and "#d62728" in one


def test_line_plot_single_point_and_errors():
    svg = line_plot([("only", [2.0], [1.0])])
    assert "<circle" in svg and "<polyline" not in svg
    with pytest.raises(ValueError):
        line_plot([])
    with pytest.raises(ValueError):
        line_plot([("empty", [], [])])
