import json

import pytest

from orbifold_hkr import cli
from orbifold_hkr.cli import (NonSquareMatrix, SchemaError, main, parse_jobspec,
                              render_json, render_table, run)

from fractions import Fraction

F = Fraction


# parsing ------------------------------------------------------------------------

def test_parse_wps_job():
    job = parse_jobspec('{"command": "wps", "weights": [2, 3]}')
    assert job.command == "wps"
    assert job.weights == (2, 3)
    assert job.t_max == 10
    assert job.output == "json"
    assert not job.oracle


def test_parse_gamma_job():
    job = parse_jobspec('{"command": "gamma", "r": 2}')
    assert job.r == 2


def test_parse_quotient_job():
    text = ('{"command": "quotient", "generators": [[["0","-1"],["1","0"]]], '
            '"t_max": 6, "oracle": true}')
    job = parse_jobspec(text)
    assert job.generators == (((F(0), F(-1)), (F(1), F(0))),)
    assert job.t_max == 6
    assert job.oracle


def test_parse_accepts_integer_entries():
    job = parse_jobspec('{"command": "quotient", "generators": [[[0, -1], [1, 0]]]}')
    assert job.generators[0][0][1] == F(-1)


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"weights": [2, 3]}',
    '{"command": "dance"}',
    '{"command": "wps"}',
    '{"command": "wps", "weights": []}',
    '{"command": "wps", "weights": [2, 0]}',
    '{"command": "wps", "weights": [2.5]}',
    '{"command": "wps", "weights": [true]}',
    '{"command": "wps", "weights": [2], "r": 3}',
    '{"command": "gamma", "r": 1}',
    '{"command": "gamma", "r": "2"}',
    '{"command": "circle", "n": 1}',
    '{"command": "quotient", "generators": []}',
    '{"command": "quotient", "generators": [[["1.5"]]]}',
    '{"command": "quotient", "generators": [[[1, 0], [0, 1]]], "t_max": -1}',
    '{"command": "quotient", "generators": [[[1]]], "format": "yaml"}',
    '{"command": "quotient", "generators": [[[1]]], "oracle": "yes"}',
])
def test_parse_rejects_bad_documents(text):
    with pytest.raises(SchemaError):
        parse_jobspec(text)


def test_parse_rejects_non_square_matrix():
    with pytest.raises(NonSquareMatrix):
        parse_jobspec('{"command": "quotient", "generators": [[[1, 0]]]}')


def test_parse_rejects_mixed_sizes():
    text = '{"command": "quotient", "generators": [[[1]], [[1, 0], [0, 1]]]}'
    with pytest.raises(SchemaError):
        parse_jobspec(text)


# reports -------------------------------------------------------------------------

def test_wps_report_contents():
    job = parse_jobspec('{"command": "wps", "weights": [2, 3]}')
    report = run(job)
    assert report["HH"] == {"0": 5}
    assert len(report["components"]) == 4
    assert report["components"][0]["dimension"] == 1


def test_gamma_report_contents():
    job = parse_jobspec('{"command": "gamma", "r": 2}')
    report = run(job)
    assert report["cofiber"]["H1"] == "Z/2"
    assert report["cofiber"]["H0"] == "Z"
    assert report["cofiber"]["H2"] == "0"
    assert report["cover"]["H2"] == "Z"


def test_circle_report_contents():
    job = parse_jobspec('{"command": "circle", "n": 3}')
    report = run(job)
    assert report["fiber_dimension"] == {"generic": 3, "central": 3}
    assert report["central_complex"] == {"H0": 1, "H1": 1, "action_trivial": True}
    assert report["generic_fiber"] == {"H0": 1, "H1": 1}


def test_quotient_report_with_oracle():
    text = ('{"command": "quotient", "generators": [[["-1"]]], '
            '"t_max": 4, "oracle": true}')
    report = run(parse_jobspec(text))
    assert report["group_order"] == 2
    assert report["oracle"]["checked"] is True
    assert report["oracle"]["agreement"] is True
    assert report["HH"]["0"]["0"] == "2"


def test_json_round_trip():
    report = run(parse_jobspec('{"command": "wps", "weights": [2, 3]}'))
    text = render_json(report)
    assert json.loads(text) == report
    assert text.endswith("\n")


def test_table_render_smoke():
    report = run(parse_jobspec('{"command": "quotient", "generators": [[["-1"]]], "t_max": 3}'))
    text = render_table(report)
    assert "HH (rows p, columns weight):" in text
    assert "quotient report" in text


# the executable ---------------------------------------------------------------------

def test_main_with_spec_file(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "wps", "weights": [2, 3]}')
    code = main(["wps", "--spec", str(spec)])
    assert code == 0
    out = capsys.readouterr().out
    assert json.loads(out)["HH"] == {"0": 5}


def test_main_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO('{"command": "gamma", "r": 4}'))
    code = main(["gamma"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["cofiber"]["H1"] == "Z/4"


def test_main_command_mismatch(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "wps", "weights": [2, 3]}')
    assert main(["gamma", "--spec", str(spec)]) == 2
    assert "input error" in capsys.readouterr().err


def test_main_bad_input_exit_2(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text("{broken")
    assert main(["wps", "--spec", str(spec)]) == 2


def test_main_missing_file_exit_2(capsys):
    assert main(["wps", "--spec", "/nonexistent/job.json"]) == 2


def test_main_singular_generator_exit_2(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "quotient", "generators": [[[1, 2], [2, 4]]]}')
    assert main(["quotient", "--spec", str(spec)]) == 2


def test_main_cap_exceeded_exit_3(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "quotient", "generators": [[[0, -1], [1, 0]]], "cap": 3}')
    assert main(["quotient", "--spec", str(spec)]) == 3
    assert "cap exceeded" in capsys.readouterr().err


def test_main_shear_exit_3(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "quotient", "generators": [[[1, 1], [0, 1]]]}')
    assert main(["quotient", "--spec", str(spec)]) == 3


def test_main_flag_overrides(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "quotient", "generators": [[["-1"]]], "t_max": 9}')
    code = main(["quotient", "--spec", str(spec), "--t-max", "2", "--format", "json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert list(report["HH"]["0"]) == ["0", "1", "2"]
    assert report["input"]["t_max"] == 2


def test_main_oracle_disagreement_exit_4(tmp_path, capsys, monkeypatch):
    # the disagreement branch is unreachable through honest math, so the
    # exit-code contract is pinned by stubbing the verdict
    mismatch = {"mode": "homology", "sector": 0, "degree": 0, "weight": 0,
                "molien": "1", "oracle": "2"}
    monkeypatch.setattr(cli, "oracle_verdict", lambda G, t: mismatch)
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "quotient", "generators": [[["-1"]]], "oracle": true}')
    code = main(["quotient", "--spec", str(spec)])
    assert code == 4
    report = json.loads(capsys.readouterr().out)
    assert report["oracle"]["agreement"] is False
    assert report["oracle"]["first_disagreement"] == mismatch


def test_main_determinism(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text('{"command": "quotient", "generators": [[[0, -1], [1, -1]]], '
                    '"t_max": 5, "oracle": true}')
    assert main(["quotient", "--spec", str(spec)]) == 0
    first = capsys.readouterr().out
    assert main(["quotient", "--spec", str(spec)]) == 0
    second = capsys.readouterr().out
    assert first == second
