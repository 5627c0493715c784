"""CLI dispatch, formats, exit codes, and golden outputs."""

import json

import pytest

from polycrep import cli

GOLDEN = [
    (["complexes", "count", "--n", "5"],
     '{"count": 81, "full_only": false, "n": 5}'),
    (["complexes", "count", "--n", "6"],
     '{"count": 2646, "full_only": false, "n": 6}'),
    (["complexes", "count", "--n", "5", "--full-only"],
     '{"count": 76, "full_only": true, "n": 5}'),
    (["resolutions", "census", "--n", "5"],
     '{"n": 5, "nonprojective": 0, "projective": 81, "total": 81}'),
    (["resolutions", "census", "--n", "6"],
     '{"n": 6, "nonprojective": 962, "projective": 1684, "total": 2646}'),
    (["chambers", "count", "--arrangement", "B", "--n", "6", "--m", "3"],
     '{"arrangement": "B", "m": 3, "method": "enumerate", "n": 6, '
     '"regions": 332}'),
    (["chambers", "count", "--arrangement", "B", "--n", "6", "--m", "3",
      "--method", "charpoly"],
     '{"arrangement": "B", "m": 3, "method": "charpoly", "n": 6, '
     '"regions": 332}'),
    (["chambers", "count", "--arrangement", "A", "--n", "5",
      "--in-cone", "F"],
     '{"arrangement": "A", "m": null, "method": "enumerate", "n": 5, '
     '"regions": 81}'),
    (["chambers", "count", "--arrangement", "A", "--n", "5",
      "--in-cone", "C0"],
     '{"arrangement": "A", "m": null, "method": "enumerate", "n": 5, '
     '"regions": 76}'),
    (["chambers", "count", "--arrangement", "A", "--n", "6",
      "--at-ray", "1,1,1,1,1,1"],
     '{"arrangement": "A", "m": null, "method": "enumerate", "n": 6, '
     '"regions": 332}'),
    (["bunches", "classify", "--n", "5"],
     '{"n": 5, "nonprojective": 0, "projective": 76, "total": 76}'),
]


@pytest.mark.parametrize("argv,expected", GOLDEN,
                         ids=[" ".join(g[0]) for g in GOLDEN])
def test_golden_outputs(argv, expected, capsys):
    assert cli.main(argv) == 0
    assert capsys.readouterr().out.strip() == expected


def test_cox_verify(capsys):
    assert cli.main(["cox", "verify", "--n", "5", "--samples", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"n": 5, "samples": 3, "failures": 0, "identities": "ok"}


def test_plain_and_csv_formats(capsys):
    assert cli.main(["--format", "plain", "complexes", "count",
                     "--n", "5"]) == 0
    out = capsys.readouterr().out
    assert "count=81" in out.splitlines()
    assert cli.main(["--format", "csv", "complexes", "count",
                     "--n", "5"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split(",") == ["count", "full_only", "n"]
    assert lines[1].split(",") == ["81", "False", "5"]


def test_enumerate_streams_ndjson(capsys):
    assert cli.main(["complexes", "enumerate", "--n", "5",
                     "--full-only"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 76
    for line in lines[:5]:
        obj = json.loads(line)
        assert set(obj) == {"n", "maximal_faces"}


def test_census_records_stream(capsys):
    assert cli.main(["resolutions", "census", "--n", "5",
                     "--records"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 81
    kinds = {json.loads(line)["kind"] for line in lines}
    assert kinds == {"projective"}


def test_parallelism_does_not_change_output(capsys):
    outs = []
    for p in ("1", "4"):
        assert cli.main(["--parallelism", p, "complexes", "count",
                         "--n", "6"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_computation_error_exit_1(capsys):
    assert cli.main(["chambers", "count", "--arrangement", "B",
                     "--n", "7", "--m", "3"]) == 1
    assert "error:" in capsys.readouterr().err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["chambers", "count", "--arrangement", "Z", "--n", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_mutually_exclusive_cone_and_ray(capsys):
    assert cli.main(["chambers", "count", "--arrangement", "A", "--n", "5",
                     "--in-cone", "F", "--at-ray", "1,1,1,1,1"]) == 1


def test_oracle_crosscheck_cli(capsys):
    assert cli.main(["oracle", "crosscheck", "--n", "5",
                     "--max-k", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    for line in lines:
        assert json.loads(line)["mismatches"] == 0
