import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from hgx import corpus
from hgx.cli import main

DATA = Path(corpus.__file__).parent / "data"


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, [str(a) for a in args], env=env)

    return invoke


def report(result):
    return json.loads(result.output)


def test_parse_prints_normalized_text(run):
    r = run("parse", DATA / "slq2.hgx")
    assert r.exit_code == 0
    assert r.output.startswith("scalars QIQ")


def test_check_passes_on_sweedler(run):
    r = run("check", DATA / "sweedler-h4.hgx", "--report", "json")
    assert r.exit_code == 0
    d = report(r)
    assert {"tool", "version", "command", "input_digest", "report_digest", "truncation", "checks", "timing"} <= set(d)
    names = [c["name"] for c in d["checks"]]
    assert names == sorted(names)
    assert all(c["verdict"] == "pass" for c in d["checks"])


def test_report_digest_ignores_timing(run):
    a = report(run("check", DATA / "taft-h4prime.hgx", "--report", "json"))
    b = report(run("check", DATA / "taft-h4prime.hgx", "--report", "json"))
    a.pop("timing"), b.pop("timing")
    assert a == b


def test_input_digest_tracks_parameters(run):
    a = report(run("check", DATA / "fx.hgx", "--report", "json"))
    b = report(run("check", DATA / "fx.hgx", "--degree", "3", "--report", "json"))
    assert a["input_digest"] != b["input_digest"]


def test_degree_zero_runs_unit_identities(run):
    assert run("check", DATA / "fx.hgx", "--degree", "0").exit_code == 0


def test_missing_antipode_is_a_model_failure(run):
    r = run("check", DATA / "fx.hgx", "--level", "hopf")
    assert r.exit_code == 1
    assert "no antipode certified at this truncation" in r.output


def test_usage_errors_exit_2(run, tmp_path):
    assert run("check", DATA / "fx.hgx", "--degree", "-1").exit_code == 2
    assert run("check", DATA / "slq2.hgx", "--q", "0").exit_code == 2
    assert run("corpus", "--name", "nosuch").exit_code == 2
    assert run("check", tmp_path / "absent.hgx").exit_code == 2
    bad = tmp_path / "bad.hgx"
    bad.write_text("scalars QIQ\nalgebra A { gens x y rules x*y -> y*x }\n")
    r = run("check", bad)
    assert r.exit_code == 2 and "line 2" in r.output


def test_certify_galois(run):
    r = run("certify-galois", DATA / "orbit-z4.hgx", "act", "--report", "json")
    assert r.exit_code == 0
    verdicts = {c["name"]: c["verdict"] for c in report(r)["checks"]}
    assert verdicts["hopf_galois"] == "pass"
    assert run("certify-galois", DATA / "laurent.hgx", "reg").exit_code == 1
    assert run("certify-galois", DATA / "laurent.hgx", "reg", "--slack", "4").exit_code == 0
    assert run("certify-galois", DATA / "orbit-z4.hgx", "nosuch").exit_code == 2


def test_certify_qpb(run):
    r = run("certify-qpb", DATA / "taft-subgroup.hgx", "pi")
    assert r.exit_code == 0, r.output


def test_corpus_subset_and_listing(run):
    r = run("corpus", "--list")
    assert r.exit_code == 0
    assert len(r.output.strip().splitlines()) == len(corpus.names())
    r = run("corpus", "--name", "fx", "--name", "sweedler-h4", "--report", "json")
    assert r.exit_code == 0
    entries = {c["name"].split("/")[0] for c in report(r)["checks"]}
    assert entries == {"fx", "sweedler-h4"}


def test_export_round_trip(run, tmp_path):
    r = run("export", tmp_path)
    assert r.exit_code == 0
    files = sorted(p.name for p in tmp_path.glob("*.hgx"))
    assert files == sorted(f"{n}.hgx" for n in corpus.names())
    assert run("check", tmp_path / "sweedler-h4.hgx").exit_code == 0


def test_colour_is_opt_in(run):
    plain = run("check", DATA / "sweedler-h4.hgx")
    coloured = run("check", DATA / "sweedler-h4.hgx", env={"HGX_COLOR": "1"})
    assert "\x1b[" not in plain.output
    assert "\x1b[" in coloured.output
