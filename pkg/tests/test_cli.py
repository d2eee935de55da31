"""Command-line interface: outputs, exit codes, series file round-trips."""
import json
from fractions import Fraction

import pytest

from bipade.cli import (
    CSV_HEADER,
    EXIT_CHECK,
    EXIT_DEGENERACY,
    EXIT_INPUT,
    build_parser,
    load_series_file,
    main,
    save_series_file,
)
from bipade.errors import InputError
from bipade.riccati import RiccatiProblem, generate_series


def write_series(path, N, M, entries, name="test"):
    path.write_text(
        json.dumps({"name": name, "N": N, "M": M, "entries": entries})
    )
    return str(path)


@pytest.fixture
def geometric_series(tmp_path):
    # f(x, y) = x/(1-x) + y-terms; the univariate column is geometric.
    entries = [[n, 0, 1 if n > 0 else 0] for n in range(5)]
    return write_series(tmp_path / "geo.json", 4, 0, entries)


@pytest.fixture
def biv_series(tmp_path):
    prob = RiccatiProblem(Fraction(1), Fraction(1, 2))
    s = generate_series(prob, Fraction(9), 4, 4)
    entries = [
        [n, m, f"{s.coeff(n, m).numerator}/{s.coeff(n, m).denominator}"]
        for n in range(5)
        for m in range(5)
    ]
    return write_series(tmp_path / "biv.json", 4, 4, entries)


def test_uni_geometric_output(geometric_series, capsys):
    assert main(["uni", geometric_series, "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "A: [0, 1]  B: [1, -1]"
    assert out[1] == "e: [1]"
    assert main(["uni", geometric_series, "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "A: [0]  B: [1]"


def test_uni_oracle_handles_non_normal_entry(geometric_series, capsys):
    # The geometric [2/2] entry is reducible: the recursion reports the
    # degeneracy while the linear-solve oracle returns the reduced entry.
    assert main(["uni", geometric_series, "2"]) == EXIT_DEGENERACY
    capsys.readouterr()
    assert main(["uni", geometric_series, "2", "--algo", "oracle"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "A: [0, 1, 0]  B: [1, -1, 0]"


def test_uni_insufficient_orders(geometric_series, capsys):
    assert main(["uni", geometric_series, "3"]) == EXIT_INPUT
    assert "requires" in capsys.readouterr().err


def test_biv_check_passes(biv_series, capsys):
    assert main(["biv", biv_series, "2", "1", "--check"]) == 0
    out = capsys.readouterr().out
    assert "check: recursion and oracle agree" in out


def test_biv_right_side(biv_series):
    assert main(["biv", biv_series, "2", "1", "--side", "right"]) == 0
    assert main(["biv", biv_series, "1", "2", "--side", "right", "--algo", "oracle"]) == 0


def test_biv_degeneracy_exit_code(tmp_path, capsys):
    # Level-0 x-series exactly x: zero pivot at order 2.
    entries = [[n, m, 0] for n in range(5) for m in range(3)]
    entries = [
        [n, m, 1 if (n, m) in ((1, 0), (0, 1)) else (-1 if (n, m) == (0, 2) else 0)]
        for n, m, _ in entries
    ]
    path = write_series(tmp_path / "deg.json", 4, 2, entries)
    assert main(["biv", path, "2", "1"]) == EXIT_DEGENERACY
    err = capsys.readouterr().err
    assert "(n=2, m=1)" in err


def test_exact_mode_rejects_decimals(tmp_path, capsys):
    entries = [[0, 0, 0], [1, 0, "0.5"], [2, 0, 1], [3, 0, 1], [4, 0, 1]]
    path = write_series(tmp_path / "dec.json", 4, 0, entries)
    assert main(["uni", path, "2"]) == EXIT_INPUT
    assert "exact mode" in capsys.readouterr().err
    # The same file is fine in float mode.
    assert main(["uni", path, "2", "--mode", "float"]) == 0


def test_series_file_validation(tmp_path):
    path = write_series(tmp_path / "dup.json", 1, 0, [[0, 0, 0], [1, 0, 1], [1, 0, 2]])
    with pytest.raises(InputError, match="more than once"):
        load_series_file(path, "exact")
    path = write_series(tmp_path / "miss.json", 1, 0, [[0, 0, 0]])
    with pytest.raises(InputError, match="missing"):
        load_series_file(path, "exact")
    path = write_series(tmp_path / "oob.json", 1, 0, [[0, 0, 0], [1, 0, 1], [2, 0, 1]])
    with pytest.raises(InputError, match="outside"):
        load_series_file(path, "exact")


def test_series_roundtrip_exact(tmp_path):
    prob = RiccatiProblem(Fraction(2), Fraction(3, 7))
    s = generate_series(prob, Fraction(5, 3), 3, 2)
    path = tmp_path / "round.json"
    save_series_file(str(path), s, name="riccati")
    again = load_series_file(str(path), "exact")
    assert again == s


def test_riccati_csv_header_and_json(capsys):
    assert main([
        "riccati", "--nmax", "2", "--format", "csv", "--timeout-secs", "30",
    ]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,err_left,err_right,time_general_s,time_refined_s"
    assert len(lines) == 3 and lines[1].startswith("1,")
    assert main([
        "riccati", "--nmax", "2", "--format", "json", "--timeout-secs", "30",
    ]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [row["n"] for row in payload] == [1, 2]
    assert set(payload[0]) == set(CSV_HEADER)


def test_riccati_integer_beta_rejected(capsys):
    assert main(["riccati", "--beta", "2", "--nmax", "1"]) == EXIT_INPUT
    assert "non-integer" in capsys.readouterr().err


def test_bench_smoke(capsys):
    assert main(["bench", "--nmax", "2", "--repeats", "1"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert set(result["univariate"]) == {"algorithm1", "algorithm2", "algorithm3"}
    assert set(result["left"]) == set(result["right"]) == {"general", "refined"}


def test_mode_env_default(monkeypatch):
    monkeypatch.setenv("PADE_MODE", "float")
    parser = build_parser()
    args = parser.parse_args(["uni", "x.json", "2"])
    assert args.mode == "float"
    args = parser.parse_args(["uni", "x.json", "2", "--mode", "exact"])
    assert args.mode == "exact"
    monkeypatch.setenv("PADE_MODE", "bogus")
    assert build_parser().parse_args(["uni", "x.json", "2"]).mode == "exact"
