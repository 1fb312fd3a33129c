import json

import pytest

from ostrowski_frac.cli import main
from ostrowski_frac.report import (
    ConfigError,
    SweepConfig,
    all_hold,
    parse_config,
    render_report,
    resolve_corpus,
    run_sweep,
)

SMALL_SWEEP = """\
# fast grid for tests
functions = powdecay,const1
theorems = t22,t26,mm
x_fracs = 0.25,0.75
mu = 0.5,1.0
alpha = 0.5,1.0
m = 0.5
q = 1.0,2.0
"""


class TestFracIntCommand:
    def test_lower_value(self, capsys):
        rc = main(["frac-int", "--f", "const1", "--a", "0", "--x", "1", "--mu", "0.5"])
        assert rc == 0
        assert capsys.readouterr().out.strip() == "1.1283791670955126"

    def test_upper_flag(self, capsys):
        rc = main(
            ["frac-int", "--f", "const1", "--b", "1", "--x", "0", "--mu", "0.5",
             "--upper"]
        )
        assert rc == 0
        assert capsys.readouterr().out.strip() == "1.1283791670955126"

    def test_unknown_function_exits_2(self, capsys):
        rc = main(["frac-int", "--f", "nope", "--a", "0", "--x", "1", "--mu", "0.5"])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_domain_exits_2(self, capsys):
        rc = main(["frac-int", "--f", "const1", "--a", "1", "--x", "1", "--mu", "0.5"])
        assert rc == 2


class TestCheckConvexityCommand:
    def test_pass(self, capsys):
        rc = main(
            ["check-convexity", "--f", "powdecay", "--kind", "alpha-m-geom",
             "--alpha", "0.5", "--m", "0.5", "--q", "2"]
        )
        assert rc == 0
        assert capsys.readouterr().out.strip() == "pass"

    def test_counterexample_exits_1(self, capsys):
        # |f'| = 1 for linear, but additive m-convexity of the constant 1
        # fails: 1 > t + m(1-t) for m < 1
        rc = main(
            ["check-convexity", "--f", "linear", "--kind", "m-convex",
             "--m", "0.5"]
        )
        assert rc == 1
        assert capsys.readouterr().out.startswith("counterexample")


class TestVerifyCommand:
    def test_classical_pass(self, capsys):
        rc = main(
            ["verify", "--theorem", "classical", "--f", "linear",
             "--a", "0", "--b", "1", "--x", "0.5"]
        )
        assert rc == 0
        out = capsys.readouterr().out.strip()
        assert out == "classical: pass lhs=0 rhs=0.25 margin=0.25"

    def test_theorem_pass(self, capsys):
        rc = main(
            ["verify", "--theorem", "t22", "--f", "powdecay", "--x", "1.4",
             "--mu", "0.5", "--alpha", "0.5", "--m", "0.5"]
        )
        assert rc == 0
        assert capsys.readouterr().out.startswith("t22: pass")

    def test_hypothesis_error_exits_2(self, capsys):
        rc = main(
            ["verify", "--theorem", "t24", "--f", "powdecay", "--x", "1.4",
             "--mu", "0.5", "--alpha", "0.5", "--m", "0.5", "--q", "1"]
        )
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestSweepCommand:
    def test_small_sweep_passes(self, tmp_path, capsys):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(SMALL_SWEEP)
        out = tmp_path / "report.json"
        rc = main(["sweep", "--config", str(cfg), "--output", str(out)])
        assert rc == 0
        report = json.loads(out.read_text())
        assert report["verdicts"] and all(v["holds"] for v in report["verdicts"])
        err = capsys.readouterr().err
        assert "t22:" in err and "fail" in err

    def test_byte_identical_reports(self, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(SMALL_SWEEP)
        outs = []
        for name in ("r1.json", "r2.json"):
            out = tmp_path / name
            assert main(["sweep", "--config", str(cfg), "--output", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_crafted_violation_exits_1(self, tmp_path, capsys):
        # an extra member whose declared M understates |f'|; audit disabled
        # so the sweep itself must catch the violated inequality
        cfg = tmp_path / "bad.cfg"
        cfg.write_text(
            "functions = bad\n"
            "theorems = t22\n"
            "x_fracs = 0.95\n"
            "mu = 1.0\n"
            "alpha = 1.0\n"
            "m = 0.5\n"
            "q = 1.0\n"
            "audit = false\n"
            "function.bad = affine slope=0.8 intercept=0.0 lo=1.0 hi=2.0 "
            "declared_M=0.1\n"
        )
        rc = main(["sweep", "--config", str(cfg)])
        assert rc == 1
        report = json.loads(capsys.readouterr().out)
        assert any(not v["holds"] for v in report["verdicts"])

    def test_audit_catches_crafted_violation_by_default(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text(
            "functions = bad\n"
            "function.bad = affine slope=0.8 intercept=0.0 lo=1.0 hi=2.0 "
            "declared_M=0.1\n"
        )
        rc = main(["sweep", "--config", str(cfg)])
        assert rc == 2
        assert "failed audit" in capsys.readouterr().err

    def test_malformed_config_exits_2(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("this is not a config\n")
        rc = main(["sweep", "--config", str(cfg)])
        assert rc == 2

    def test_missing_config_exits_2(self, capsys):
        assert main(["sweep", "--config", "/no/such/file.cfg"]) == 2


class TestConfigParsing:
    def test_defaults_roundtrip(self):
        cfg = parse_config("")
        assert cfg == SweepConfig()

    def test_comments_and_values(self):
        cfg = parse_config(SMALL_SWEEP)
        assert cfg.functions == ("powdecay", "const1")
        assert cfg.theorems == ("t22", "t26", "mm")
        assert cfg.mus == (0.5, 1.0)
        assert cfg.qs == (1.0, 2.0)

    def test_fingerprint_tracks_content(self):
        c1 = parse_config(SMALL_SWEEP)
        c2 = parse_config(SMALL_SWEEP + "seed = 1\n")
        assert c1.fingerprint() != c2.fingerprint()
        assert c1.fingerprint() == parse_config(SMALL_SWEEP).fingerprint()

    @pytest.mark.parametrize(
        "text",
        [
            "no equals sign",
            "mu = banana",
            "theorems = t99",
            "format = xml",
            "wiggle = 3",
            "function.f = \n",
            "function.f = affine slope\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ConfigError):
            parse_config(text)

    def test_extra_function_resolves(self):
        cfg = parse_config(
            "function.aff = affine slope=0.5 intercept=0.0 lo=0.0 hi=1.0\n"
        )
        ids = [s.id for s in resolve_corpus(cfg)]
        assert "aff" in ids and "powdecay" in ids


class TestRenderReport:
    def test_csv_header_and_rows(self):
        cfg = parse_config(SMALL_SWEEP + "format = csv\n")
        report = run_sweep(cfg)
        text = render_report(report, "csv")
        lines = text.strip().splitlines()
        assert lines[0].startswith("theorem,function,a,b,x,mu")
        assert len(lines) == len(report["verdicts"]) + 1
        assert all_hold(report)

    def test_json_contains_fingerprint(self):
        cfg = parse_config(SMALL_SWEEP)
        report = run_sweep(cfg)
        assert report["config_fingerprint"] == cfg.fingerprint()
