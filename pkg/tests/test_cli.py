import subprocess
import sys

import pytest

import pl_maps
from thompson_growth import forest_core
from thompson_growth.cli import RunConfig, emit_bfile, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_module(*argv, **kw):
    return subprocess.run([sys.executable, "-m", "thompson_growth", *argv],
                          capture_output=True, text=True, **kw)


@pytest.fixture
def corrupted_table():
    old = forest_core.WEIGHT_TABLE["I"]["R"]
    forest_core.WEIGHT_TABLE["I"]["R"] = forest_core.WEIGHT_TABLE["R"]["I"] = 2
    forest_core.refresh_weight_table()
    yield
    forest_core.WEIGHT_TABLE["I"]["R"] = forest_core.WEIGHT_TABLE["R"]["I"] = old
    forest_core.refresh_weight_table()


# --- length -------------------------------------------------------------------------

@pytest.mark.parametrize("word,n", [("", "0"), ("aA", "0"), ("b", "1"), ("x0 x1^-1", "2")])
def test_length(capsys, word, n):
    code, out, _ = run(capsys, "length", word)
    assert code == 0 and out.strip() == n


def test_length_eight_letters_against_bfs(capsys):
    dist = pl_maps.distances(8)
    for w in ("abABabAB", "aabbAABB", "bbbbaaaa", "abbaBAAb"):
        code, out, _ = run(capsys, "length", w)
        assert code == 0
        assert int(out) == dist[pl_maps.of_word(w)]


def test_length_parse_error(capsys):
    code, _, err = run(capsys, "length", "abq")
    assert code == 2 and "invalid" in err


# --- count --------------------------------------------------------------------------

def test_count_b(capsys):
    code, out, _ = run(capsys, "count", "--method", "b", "--max-n", "10")
    assert code == 0
    assert out.splitlines()[-1] == "10 56664"


def test_count_a_geodesics(capsys):
    code, out, _ = run(capsys, "count", "--method", "a", "--max-n", "5", "--geodesics")
    assert code == 0
    assert out.splitlines()[-1] == "5 314 324"


def test_count_oracle(capsys):
    code, out, _ = run(capsys, "count", "--method", "oracle", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[-1] == "3 36"


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--max-n", "5", "--format", "csv", "--precision", "8")
    lines = out.splitlines()
    assert lines[0] == "n,f,fekete_upper,ratio"
    assert lines[1] == "0,1,,"
    assert lines[-1] == "5,314,3.1578095,2.9074074"


def test_count_geodesics_needs_method_a(capsys):
    code, _, err = run(capsys, "count", "--method", "b", "--geodesics")
    assert code == 2


def test_count_oracle_resource_limit(capsys):
    code, _, err = run(capsys, "count", "--method", "oracle", "--max-n", "11")
    assert code == 3
    code, _, err = run(capsys, "count", "--method", "oracle", "--max-n", "6",
                       "--memory-budget", "10000")
    assert code == 3


def test_count_b_memory_budget(capsys):
    code, _, err = run(capsys, "count", "--max-n", "400", "--memory-budget", "1000000")
    assert code == 3 and "budget" in err


def test_count_method_a_warns():
    with pytest.warns(RuntimeWarning):
        RunConfig("count", max_n=17, method="a")


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--method", "c"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "count", "--max-n", "-1")
    assert code == 2


def test_count_threads_do_not_change_output(capsys):
    _, one, _ = run(capsys, "count", "--method", "a", "--max-n", "7", "--geodesics")
    _, two, _ = run(capsys, "count", "--method", "a", "--max-n", "7", "--geodesics",
                    "--threads", "2")
    assert one == two


def test_count_streams():
    proc = subprocess.Popen([sys.executable, "-m", "thompson_growth", "count", "--max-n", "600"],
                            stdout=subprocess.PIPE, text=True)
    try:
        first = proc.stdout.readline()
        assert first == "0 1\n"
        assert proc.poll() is None  # still running: output came before the end
    finally:
        proc.kill()
        proc.wait()


# --- validate -----------------------------------------------------------------------

def test_validate_trivial(capsys):
    code, out, _ = run(capsys, "validate", "0", "0")
    assert code == 0
    assert out.splitlines()[1].split() == ["0", "1", "1", "1", "yes"]


def test_validate_agree(capsys):
    code, out, _ = run(capsys, "validate", "9", "7")
    assert code == 0
    assert "NO" not in out
    assert len(out.splitlines()) == 11


def test_validate_fault_injection(capsys, corrupted_table):
    code, out, err = run(capsys, "validate", "4", "4")
    assert code == 1
    assert "NO" in out
    assert "first disagreement at n=1" in err


# --- analyze ------------------------------------------------------------------------

def test_analyze_22(capsys):
    code, out, _ = run(capsys, "analyze", "--max-n", "22")
    assert code == 0
    row = next(l for l in out.splitlines() if l.split()[:1] == ["22"])
    assert row.split()[2].startswith("2.8349398")


def test_analyze_bfile(capsys, tmp_path):
    p = tmp_path / "f.txt"
    p.write_text("0 1\n1 4\n2 12\n3 36\n")
    code, out, _ = run(capsys, "analyze", str(p), "--format", "csv", "--precision", "5")
    assert code == 0
    assert out.splitlines()[-1] == "3,36,3.3019,3.0000"


def test_analyze_not_submultiplicative(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n1 1\n2 3\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 4


def test_analyze_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 5


def test_analyze_amplitude_line(capsys):
    code, out, _ = run(capsys, "analyze", "--max-n", "60", "--precision", "10")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("amplitude"))
    assert 7.5 < float(line.split("=")[1].split()[0]) < 8.5


# --- emit ---------------------------------------------------------------------------

def test_emit_file(capsys, tmp_path):
    p = tmp_path / "f.txt"
    code, _, _ = run(capsys, "emit", "--max-n", "3", "--out", str(p))
    assert code == 0
    assert p.read_bytes() == b"0 1\n1 4\n2 12\n3 36\n"


def test_emit_geodesics(capsys, tmp_path):
    p = tmp_path / "g.txt"
    code, _, _ = run(capsys, "emit", "--method", "a", "--geodesics", "--max-n", "1", "--out", str(p))
    assert code == 0
    assert p.read_bytes() == b"0 1\n1 4\n"


def test_emit_empty(tmp_path):
    p = tmp_path / "e.txt"
    assert emit_bfile([], str(p)) == 0
    assert p.read_bytes() == b""


def test_emit_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "emit", "--max-n", "3", "--out", str(tmp_path / "no" / "f.txt"))
    assert code == 5


def test_bfile_deterministic(tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"run{k}.txt"
        r = run_module("count", "--method", "b", "--max-n", "50", "--format", "bfile",
                       "--out", str(p))
        assert r.returncode == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].endswith(b"50 6015840076078706884412\n")
