# poetry run pytest src/birthday_coincidence/test/test_cli.py

import io
import json

import pytest

from birthday_coincidence.calc.doubles_exact import figure1_rows
from birthday_coincidence.calc.simulator import figure1_simulated, simulate
from birthday_coincidence.cli import EXIT_COMPUTATION, EXIT_IO, EXIT_OK, EXIT_USAGE, emit_figure1, figure1_table, run
from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.schema.prob import Params, SimConfig


def _run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def _json(*argv):
    code, out, _ = _run(*argv, "--format", "json")
    assert code == EXIT_OK
    return json.loads(out)


def _rows_by(envelope, key):
    return {row[key]: row for row in envelope["rows"]}


def test_default_command_is_summary():
    envelope = _json("--n", "100", "--days", "365")
    assert envelope["command"] == "summary"
    rows = _rows_by(envelope, "quantity")
    assert rows["at_least_three_share"]["value"] == pytest.approx(0.6459, abs=2e-4)
    assert rows["poisson_exactly_three_some_day"]["value"] == pytest.approx(0.6137, abs=5e-5)
    assert rows["chatgpt_at_least_three"]["published"] == 0.527
    assert 0.6189 < rows["exact_exactly_three_some_day"]["value"] < 0.6193


def test_summary_table_shows_discrepancies():
    code, out, _ = _run()
    assert code == EXIT_OK
    assert "published: 0.527" in out
    assert "published: 0.614" in out


def test_poisson_table():
    code, out, _ = _run("poisson")
    assert code == EXIT_OK
    assert out.splitlines()[0].split() == ["quantity", "value", "published"]
    assert "0.002606" in out


def test_bounds_json():
    envelope = _json("bounds", "--kmax", "8")
    assert len(envelope["rows"]) == 8
    assert envelope["rows"][0]["bound"] == "upper"
    assert envelope["rows"][1]["bound"] == "lower"
    assert envelope["notes"][0].startswith("bracket: [0.6191")
    assert any(note.startswith("q_1: published: 0.931045") for note in envelope["notes"])


def test_mckinney_csv():
    code, out, _ = _run("mckinney", "--rmax", "3", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "r,n_below,p_below,n_star,p_at,published_below,published_at"
    assert lines[1].startswith("2,22,")
    assert lines[2].startswith("3,87,")


def test_taus_reports_tau0_and_seed():
    code, out, _ = _run("taus", "--kmax", "2", "--reps", "5000", "--seed", "11", "--threads", "2")
    assert code == EXIT_OK
    assert "published: 0.386" in out
    assert "seed=11" in out

    envelope = _json("taus", "--kmax", "2", "--reps", "5000", "--seed", "11")
    assert envelope["seed"] == 11
    rows = _rows_by(envelope, "k")
    assert rows[0]["published"] == 0.386
    assert rows[0]["simulation"] == pytest.approx(0.381, abs=0.03)
    assert rows[1]["q_k"] == pytest.approx(0.930145, abs=1e-6)


def test_taus_four_term_column_reproduces_printed_table():
    envelope = _json("taus", "--kmax", "3", "--terms", "4")
    assert envelope["params"]["terms"] == 4
    rows = _rows_by(envelope, "k")
    assert rows[1]["one_minus_tau0_truncated"] == pytest.approx(0.58796, abs=2e-4)
    assert rows[1]["truncated"] == pytest.approx(rows[1]["published"], abs=5e-4)
    assert rows[2]["truncated"] == pytest.approx(rows[2]["published"], abs=5e-4)
    # 정확한 값과의 차이는 절단에서 옴
    assert abs(rows[1]["one_minus_tau0_truncated"] - rows[1]["one_minus_tau0"]) > 1e-3
    assert any(note.startswith("truncated: each reduced ladder stopped after 4 terms") for note in envelope["notes"])

    plain = _json("taus", "--kmax", "3")
    assert "truncated" not in plain["rows"][1]


def test_simulate_is_reproducible():
    first = _json("simulate", "--n", "23", "--reps", "3000", "--seed", "9", "--threads", "1")
    second = _json("simulate", "--n", "23", "--reps", "3000", "--seed", "9", "--threads", "3")
    assert first == second
    assert first["seed"] == 9
    assert first["summary"]["reps"] == 3000


def test_oracle_exhaustive():
    envelope = _json("oracle", "--n", "4", "--days", "3", "--method", "exhaustive")
    probabilities = {row["k"]: row["probability"] for row in envelope["rows"]}
    assert probabilities[0] == pytest.approx(19 / 27, abs=1e-6)
    assert probabilities[1] == pytest.approx(8 / 27, abs=1e-6)


def test_figure1_csv(tmp_path):
    target = tmp_path / "figure1.csv"
    code, out, _ = _run("figure1", "--n", "30", "--reps", "2000", "--format", "csv", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "k,conditional_exact,poisson,simulated"
    assert lines[1].startswith("0,")


def test_emit_figure1_columns():
    p = Params(n=100, d=365)
    sim = simulate(SimConfig(n=100, d=365, reps=4000, seed=3, threads=1))
    stdout = io.StringIO()
    emit_figure1(p, sim, None, digits=12, stdout=stdout)
    lines = stdout.getvalue().splitlines()
    assert lines[0] == "k,conditional_exact,poisson,simulated"
    rows = [[float(cell) if cell else 0.0 for cell in line.split(",")] for line in lines[1:]]
    assert [int(row[0]) for row in rows] == sorted(int(row[0]) for row in rows)
    assert rows[0][1] == pytest.approx(8.676e-7, rel=1e-3)
    assert sum(row[1] for row in rows) == pytest.approx(1.0, abs=1e-9)
    assert sum(row[2] for row in rows) == pytest.approx(1.0, abs=1e-9)
    assert sum(row[3] for row in rows) == pytest.approx(1.0, abs=1e-9)


def test_figure_table_joins_library_columns():
    p = Params(n=40, d=365)
    cfg = SimConfig(n=40, d=365, reps=3000, seed=5, threads=1)
    sim = simulate(cfg)
    rows = {row["k"]: row for row in figure1_table(p, sim)}
    for k, conditional, reference in figure1_rows(p):
        assert rows[k]["conditional_exact"] == conditional
        assert rows[k]["poisson"] == reference
    for k, unconditional, _ in figure1_simulated(cfg, sim):
        assert rows[k]["simulated"] == unconditional


def test_emit_figure1_rejects_other_instance():
    sim = simulate(SimConfig(n=30, d=365, reps=100, seed=3, threads=1))
    with pytest.raises(InvalidParamsError):
        emit_figure1(Params(n=100, d=365), sim, None, stdout=io.StringIO())


def test_usage_message_goes_to_given_stream(capsys):
    code, out, err = _run("bounds", "--n", "abc")
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("usage: birthday-coincidence bounds")
    assert "error: argument --n" in err
    captured = capsys.readouterr()
    assert "usage:" not in captured.err

    code, out, _ = _run("taus", "--help")
    assert code == EXIT_OK
    assert "--terms" in out


def test_usage_errors():
    assert _run("bogus")[0] == EXIT_USAGE
    assert _run("bounds", "--n", "0")[0] == EXIT_USAGE
    assert _run("taus", "--tol", "-1")[0] == EXIT_USAGE
    assert _run("simulate", "--seed", str(2 ** 64))[0] == EXIT_USAGE


def test_guard_errors_exit_three():
    code, out, err = _run("oracle", "--n", "200")
    assert code == EXIT_COMPUTATION
    assert out == ""
    assert "n <= 150" in err

    code, _, err = _run("doubles", "--n", "10", "--days", "4")
    assert code == EXIT_COMPUTATION
    assert err.startswith("error:")


def test_unwritable_output(tmp_path):
    code, _, err = _run("poisson", "--out", str(tmp_path / "missing" / "out.csv"))
    assert code == EXIT_IO
    assert "cannot write output" in err


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
