import json
import os
import subprocess
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"


def run_cli(*args, stdin=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "aztec_tilings", *args],
        capture_output=True,
        text=True,
        input=stdin,
        env=env,
    )


def test_gen_diamond_order_8():
    proc = run_cli("gen", "ad", "--n", "8")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert len(data["cells"]) == 144


def test_gen_pinwheel_with_ascii():
    proc = run_cli("gen", "r", "--n", "3", "--ascii")
    assert proc.returncode == 0
    payload, art = proc.stdout.split("\n", 1)
    assert len(json.loads(payload)["cells"]) == 6
    assert art == ".##\n###\n..#\n"


def test_gen_holey_rectangle():
    proc = run_cli("gen", "ar_holey", "--m", "3", "--n", "5", "--keep", "1,3,5")
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["vertices"]) == 36


def test_count_family_shorthands():
    assert run_cli("count", "--family", "r", "--n", "8").stdout.strip() == "80"
    assert run_cli("count", "--family", "ad", "--n", "4", "--engine", "fkt").stdout.strip() == "1024"
    assert run_cli("count", "--family", "kna", "--n", "6").stdout.strip() == "6"


def test_count_graph_family():
    proc = run_cli("count", "--family", "ar_holey", "--m", "3", "--n", "5", "--keep", "1,3,5")
    assert proc.stdout.strip() == "512"


def test_count_from_stdin():
    gen = run_cli("gen", "ar", "--m", "1", "--n", "1")
    proc = run_cli("count", "--input", "-", "--engine", "brute", stdin=gen.stdout)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2"


def test_count_region_file(tmp_path):
    gen = run_cli("gen", "kna", "--n", "4")
    path = tmp_path / "region.json"
    path.write_text(gen.stdout)
    proc = run_cli("count", "--input", str(path), "--crosscheck")
    assert proc.stdout.strip() == "6"


def test_invalid_input_exits_2():
    assert run_cli("count", "--family", "ad", "--n", "0").returncode == 2
    assert run_cli("gen", "ar_bar", "--m", "1", "--n", "1", "--remove", "1,2").returncode == 2
    assert run_cli("count").returncode == 2


def test_verify_suite_exit_code_and_format():
    proc = run_cli("verify", "lemma2", "--max-n", "2")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["suite"] == "lemma2"
    assert payload["ok"] is True

    pretty = run_cli("verify", "lemma6", "--max-n", "5", "--format", "pretty")
    assert pretty.returncode == 0
    assert "suite lemma6" in pretty.stdout

    csv = run_cli("verify", "lemma6", "--max-n", "5", "--format", "csv")
    assert csv.stdout.splitlines()[0] == "suite,case,expected,actual,ok"


def test_bench_reports_and_agrees():
    proc = run_cli(
        "bench", "--families", "r,ka", "--orders", "4:6",
        "--engines", "profile_dp,fkt", "--reps", "1",
    )
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "instance,engine,vertices,ms,digits"
    assert len(lines) == 1 + 2 * 3 * 2


def test_render_ascii_and_svg():
    art = run_cli("render", "--family", "ad", "--n", "2", "--format", "ascii")
    assert art.stdout == ".##.\n####\n####\n.##.\n"
    svg1 = run_cli("render", "--family", "r", "--n", "8", "--format", "svg")
    svg2 = run_cli("render", "--family", "r", "--n", "8", "--format", "svg")
    assert svg1.stdout.startswith("<svg")
    assert svg1.stdout == svg2.stdout

    piped = run_cli("gen", "ar_holey", "--m", "2", "--n", "4", "--keep", "2,3")
    rendered = run_cli("render", "--input", "-", "--format", "svg", stdin=piped.stdout)
    assert rendered.returncode == 0
    assert rendered.stdout.startswith("<svg")
