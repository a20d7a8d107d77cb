from pathlib import Path

from factorcount import cli, closed_forms

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_closed_examples(capsys):
    code, out, _ = run(capsys, "count", "--m", "36", "--k", "4", "--ell", "1", "--method", "closed")
    assert (code, out) == (0, "9\n")
    code, out, _ = run(capsys, "count", "--m", "12", "--k", "2", "--ell", "1", "--method", "closed")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "count", "--m", "5", "--k", "3", "--ell", "2", "--method", "recursive")
    assert (code, out) == (0, "0\n")


def test_count_ordered_and_oracle(capsys):
    code, out, _ = run(capsys, "count", "--m", "16", "--k", "2", "--ell", "2", "--ordered")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "count", "--m", "12", "--k", "3", "--method", "oracle", "--verbose")
    assert code == 0
    assert out.splitlines() == ["1 1 12", "1 2 6", "1 3 4", "2 2 3", "4"]


def test_count_usage_errors(capsys):
    cases = [
        ("count", "--m", "12", "--k", "5"),  # closed stops at k=4
        ("count", "--m", "12", "--k", "2", "--ell", "3"),  # closed needs ell <= 2
        ("count", "--m", "12", "--k", "0"),
        ("count", "--k", "2"),  # --m missing
        ("count", "--m", "1", "--k", "2"),  # closed forms need m > 1
        ("nonsense",),
        (),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 1, argv
        assert "error" in err.lower()


def test_count_recursive_handles_large_k(capsys):
    code, out, _ = run(capsys, "count", "--m", "64", "--k", "6", "--method", "recursive", "--ell", "2")
    assert (code, out) == (0, "1\n")


def test_table_bfile_stdout(capsys):
    code, out, _ = run(capsys, "table", "--max", "12", "--total", "--ell", "2", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 1\n3 1\n4 2\n5 1\n6 2\n7 1\n8 3\n9 2\n10 2\n11 1\n12 4\n"


def test_table_csv_row_count(capsys):
    code, out, _ = run(capsys, "table", "--max", "4", "--k", "2", "--ell", "1", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,value"
    assert len(lines) == 4  # header + rows for m = 2, 3, 4


def test_table_is_deterministic(capsys):
    argv = ("table", "--max", "60", "--k", "3", "--format", "csv")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_table_writes_file_with_lf_endings(tmp_path, capsys):
    out_path = tmp_path / "table.csv"
    code, _, _ = run(capsys, "table", "--max", "6", "--k", "2", "--out", str(out_path))
    assert code == 0
    data = out_path.read_bytes()
    assert data == b"m,value\n2,1\n3,1\n4,2\n5,1\n6,2\n"
    assert b"\r" not in data


def test_table_threads_match_single(capsys):
    base = run(capsys, "table", "--max", "3000", "--k", "4", "--format", "csv")
    threaded = run(capsys, "table", "--max", "3000", "--k", "4", "--format", "csv", "--threads", "2")
    assert base == threaded


def test_table_usage_errors(capsys):
    cases = [
        ("table", "--max", "1", "--k", "2"),
        ("table", "--max", "10"),  # neither --k nor --total
        ("table", "--max", "10", "--k", "2", "--total"),
        ("table", "--max", "10", "--k", "5", "--method", "closed"),
        ("table", "--max", "10", "--total", "--ell", "1"),
        ("table", "--max", "10", "--k", "2", "--threads", "0"),
        ("table", "--max", "10", "--k", "2", "--compare", "x", "--out", "y"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 1, argv
        assert "error" in err.lower()


def test_table_refuses_oracle_method_beyond_budget(capsys, monkeypatch):
    monkeypatch.setenv("FACTORCOUNT_ORACLE_MAX_M", "50")
    code, _, err = run(capsys, "table", "--max", "100", "--k", "2", "--method", "oracle")
    assert code == 1
    assert "oracle method refused" in err


def test_table_compare_missing_reference_is_a_usage_error(capsys, tmp_path):
    code, _, err = run(
        capsys, "table", "--max", "10", "--k", "2", "--compare", str(tmp_path / "absent.txt")
    )
    assert code == 1
    assert "error" in err.lower()


def test_table_compare_against_reference(capsys):
    code, out, _ = run(
        capsys, "table", "--max", "1000", "--total", "--ell", "2",
        "--compare", str(DATA / "unordered_factorizations.txt"),
    )
    assert code == 0
    assert "OK" in out
    code, out, _ = run(
        capsys, "table", "--max", "500", "--k", "3",
        "--compare", str(DATA / "three_factor_counts.txt"),
    )
    assert code == 0


def test_table_compare_detects_mismatch(tmp_path, capsys):
    lines = (DATA / "unordered_factorizations.txt").read_text().splitlines()
    lines[lines.index("12 4")] = "12 5"
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "table", "--max", "100", "--total", "--ell", "2", "--compare", str(bad))
    assert code == 2
    assert "m=12: computed 4, reference 5" in out


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max", "40", "--k-max", "5", "--ell-max", "3")
    assert code == 0
    assert "all counts agree" in out


def test_verify_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--max", "0")
    assert code == 1
    assert "error" in err


def test_verify_reports_first_mismatch(capsys, monkeypatch):
    def broken(signature, k, min_factor=1):
        return -1

    monkeypatch.setattr(cli.closed_forms, "nondecreasing_count", broken)
    code, out, _ = run(capsys, "verify", "--max", "20")
    assert code == 2
    assert "MISMATCH" in out and "closed=-1" in out


def test_bench_reports_two_timings(capsys):
    code, out, _ = run(capsys, "bench", "--max", "300", "--k", "4")
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("closed:") and "rows/s" in line for line in lines)
    assert any(line.startswith("recursive:") and "rows/s" in line for line in lines)


def test_bench_refuses_oracle_beyond_budget(capsys, monkeypatch):
    monkeypatch.setenv("FACTORCOUNT_ORACLE_MAX_M", "100")
    code, _, err = run(capsys, "bench", "--max", "500", "--k", "3", "--methods", "oracle")
    assert code == 1
    assert "oracle method refused" in err
    code, _, _ = run(capsys, "bench", "--max", "90", "--k", "3", "--methods", "oracle")
    assert code == 0


def test_internal_divisibility_failure_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(closed_forms, "quadruple_numerator", lambda exps: 25)
    code, _, err = run(capsys, "table", "--max", "10", "--k", "4")
    assert code == 3
    assert "internal error" in err
