import json
import os
import subprocess
import sys

import pytest

from laguerre_sums.cli import (
    CSV_HEADER,
    DEFAULT_GRID,
    GridConfig,
    load_grid_file,
    main,
    run_verify,
)

SRC = os.path.join(os.path.dirname(__file__), os.pardir, "src")


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_value(stdout):
    for line in stdout.splitlines():
        if line.startswith("value = "):
            return float(line.split("=", 1)[1])
    raise AssertionError(f"no value line in {stdout!r}")


def small_grid(**overrides):
    cfg = dict(
        nu_values=[0.5],
        f_values=[2.0],
        x_values=[0.5, 2.0],
        m_max=1,
        p_max=1,
        signs=["+nu+p", "-nu+p"],
        tol=1e-9,
        max_terms=400,
    )
    cfg.update(overrides)
    return GridConfig(**cfg)


def write_grid_file(path, cfg: GridConfig):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"nu_values = {', '.join(map(repr, cfg.nu_values))}\n")
        handle.write(f"f_values = {', '.join(map(repr, cfg.f_values))}\n")
        handle.write(f"x_values = {', '.join(map(repr, cfg.x_values))}\n")
        handle.write(f"m_max = {cfg.m_max}\n")
        handle.write(f"p_max = {cfg.p_max}\n")
        handle.write(f"signs = {', '.join(cfg.signs)}\n")
        handle.write(f"tol = {cfg.tol}\n")
        handle.write(f"max_terms = {cfg.max_terms}\n")


def test_eval_trivial_point(capsys):
    code, out, _ = run_cli(
        ["eval", "--m", "0", "--p", "0", "--sign-nu", "+", "--sign-p", "+",
         "--nu", "0.5", "--f", "2", "--x", "0"],
        capsys,
    )
    assert code == 0
    assert parse_value(out) == pytest.approx(1.0, rel=1e-12)


def test_eval_methods_agree(capsys):
    base = ["--m", "1", "--p", "0", "--nu", "0.5", "--f", "2", "--x", "0.7"]
    values = {}
    for method in ("closed", "lemma", "oracle"):
        code, out, _ = run_cli(["eval", *base, "--method", method], capsys)
        assert code == 0
        values[method] = parse_value(out)
    assert values["closed"] == pytest.approx(values["oracle"], rel=1e-10)
    assert values["lemma"] == pytest.approx(values["oracle"], rel=1e-10)


def test_eval_f_independence_at_m_zero(capsys):
    base = ["eval", "--m", "0", "--p", "1", "--sign-nu", "+", "--sign-p", "-",
            "--nu", "0.5", "--x", "0.3"]
    _, out_a, _ = run_cli([*base, "--f", "7"], capsys)
    _, out_b, _ = run_cli([*base, "--f", "99"], capsys)
    assert parse_value(out_a) == pytest.approx(parse_value(out_b), rel=1e-12)


def test_eval_invalid_spec_exits_2_naming_invariant(capsys):
    code, _, err = run_cli(
        ["eval", "--m", "0", "--p", "0", "--sign-nu", "-", "--sign-p", "+",
         "--nu", "1.0", "--f", "2", "--x", "1"],
        capsys,
    )
    assert code == 2
    assert "1-nu+p" in err


def test_verify_deterministic_output(tmp_path, capsys):
    grid_path = tmp_path / "grid.cfg"
    write_grid_file(grid_path, small_grid())
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for out_path in paths:
        code, _, _ = run_cli(
            ["verify", "--grid", str(grid_path), "--out", str(out_path)], capsys
        )
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    header = paths[0].read_text().splitlines()[0]
    assert header == CSV_HEADER


def test_verify_skip_accounting():
    # nu = 1.0 makes the -nu+p variant invalid at p = 0
    grid = small_grid(nu_values=[0.5, 1.0])
    records = run_verify(grid)
    assert len(records) == len(grid.points())
    skipped = [r for r in records if r.status == "skipped-invalid"]
    passed = [r for r in records if r.status == "pass"]
    failed = [r for r in records if r.status == "fail"]
    assert skipped and not failed
    assert len(skipped) + len(passed) + len(failed) == len(records)
    assert all("non-positive integer" in r.reason for r in skipped)


def test_verify_exit_codes(tmp_path, capsys):
    grid_path = tmp_path / "grid.cfg"
    write_grid_file(grid_path, small_grid(tol=1e-30))
    code, out, _ = run_cli(
        ["verify", "--grid", str(grid_path), "--out", str(tmp_path / "o.csv")],
        capsys,
    )
    assert code == 1  # unreachable tolerance: every record fails
    assert "passed/failed/skipped" in out

    bad = tmp_path / "bad.cfg"
    bad.write_text("x_values =\n")
    code, _, err = run_cli(["verify", "--grid", str(bad)], capsys)
    assert code == 2
    assert "x_values must be non-empty" in err


def test_verify_json_has_same_field_names(tmp_path, capsys):
    grid_path = tmp_path / "grid.cfg"
    write_grid_file(grid_path, small_grid(x_values=[0.5]))
    out_path = tmp_path / "records.json"
    code, _, _ = run_cli(
        ["verify", "--grid", str(grid_path), "--format", "json",
         "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    records = json.loads(out_path.read_text())
    assert sorted(records[0]) == sorted(CSV_HEADER.split(","))


def test_table_single_point(tmp_path, capsys):
    grid_path = tmp_path / "grid.cfg"
    write_grid_file(grid_path, small_grid(x_values=[0.7], m_max=0, p_max=0,
                                          signs=["+nu+p"]))
    out_path = tmp_path / "t.csv"
    code, _, _ = run_cli(["table", "--grid", str(grid_path),
                          "--out", str(out_path)], capsys)
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0] == "variant,m,p,nu,f,x,dispatch,closed,lemma"


def test_table_variant_cardinality(tmp_path, capsys):
    grid_path = tmp_path / "grid.cfg"
    write_grid_file(
        grid_path,
        small_grid(x_values=[0.4, 0.9], m_max=0, p_max=0,
                   signs=["+nu+p", "+nu-p", "-nu+p", "-nu-p"]),
    )
    out_path = tmp_path / "t.csv"
    code, _, _ = run_cli(["table", "--grid", str(grid_path),
                          "--out", str(out_path)], capsys)
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 1 + 8


def test_table_empty_x_list_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("x_values =\n")
    code, _, err = run_cli(["table", "--grid", str(bad)], capsys)
    assert code == 2
    assert "x_values must be non-empty" in err


def test_grid_file_unknown_key_rejected(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("nu_grid = 0.5\n")
    code, _, err = run_cli(["verify", "--grid", str(bad)], capsys)
    assert code == 2
    assert "unknown key" in err


def test_grid_file_comments_and_defaults(tmp_path):
    path = tmp_path / "grid.cfg"
    path.write_text("# comment only\nm_max = 1\n")
    cfg = load_grid_file(str(path))
    assert cfg.m_max == 1
    assert cfg.nu_values == DEFAULT_GRID["nu_values"]


def test_dispatch_column_audit():
    records = run_verify(small_grid(signs=["+nu-p"], m_max=2, p_max=1))
    for r in records:
        if r.status == "skipped-invalid":
            continue
        if r.spec.m == 0:
            assert r.dispatch == "s0"
        elif r.spec.m > r.spec.p:
            assert r.dispatch == "split"
        else:
            assert r.dispatch == "sm"


def test_default_grid_all_pass():
    # the shipped default grid is the reference reproduction run: every
    # non-skipped record must pass at the default 1e-9 tolerance
    records = run_verify(GridConfig(**DEFAULT_GRID))
    assert len(records) == 4 * 4 * 5 * 3 * 2 * 5
    assert not [r for r in records if r.status == "fail"]


def test_points_order_is_canonical_regardless_of_input_order():
    shuffled = small_grid(nu_values=[1.7, 0.3], x_values=[2.0, 0.5])
    ordered = small_grid(nu_values=[0.3, 1.7], x_values=[0.5, 2.0])
    assert shuffled.points() == ordered.points()


def test_module_entry_point_runs():
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "laguerre_sums", "eval", "--m", "0", "--p", "0",
         "--nu", "0.5", "--f", "2", "--x", "0"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert "value = " in proc.stdout
