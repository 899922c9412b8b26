import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from asymcover.cli import main, load_input, InputError
from asymcover.formats import FormatError, parse_algfile, format_algfile, parse_modfile, format_modfile
from asymcover.algebra import verify_algebra, regular_module
from asymcover.corpus import standard_corpus
from asymcover.representations import simple_modules

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# (golden file, argv)
GOLDEN_RUNS = [
    ("verify_A2.json", ["verify", "builtin:A2/GF(5)", "--report", "json"]),
    ("verify_dual_numbers.json", ["verify", "builtin:GF(5)[x]/(x^2)", "--report", "json"]),
    ("compile_kk1.json", ["compile", str(DATA / "kk1.quiver"), "--report", "json"]),
    ("resolve_dual_numbers.json", ["resolve", "builtin:GF(5)[x]/(x^2)", "--cutoff", "5", "--report", "json"]),
    ("cover_M2_semilocal.txt", ["cover", "builtin:M2(GF(5))", "--semilocal"]),
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- compile ----------------------------------------------------------------

def test_compile_kk1(capsys):
    code, out, _ = run(capsys, "compile", str(DATA / "kk1.quiver"))
    assert code == 0
    assert "dim: 5" in out and "compiled=5, oracle=5" in out


def test_compile_algfile(capsys):
    code, out, _ = run(capsys, "compile", str(DATA / "gf5.alg"))
    assert code == 0 and "dim: 1" in out


def test_compile_bad_relation(capsys):
    code, _, err = run(capsys, "compile", str(DATA / "bad_relation.quiver"))
    assert code == 2
    assert "line 6, col" in err


def test_compile_dump_roundtrip(tmp_path, capsys):
    dump = tmp_path / "kk1.alg"
    code, _, _ = run(capsys, "compile", str(DATA / "kk1.quiver"), "--dump", str(dump))
    assert code == 0
    a = parse_algfile(dump.read_text())
    assert a.dim == 5 and verify_algebra(a) and a.radical.dim == 3


def test_missing_file(capsys):
    code, _, err = run(capsys, "compile", str(DATA / "nope.quiver"))
    assert code == 2 and "cannot read" in err


def test_unknown_builtin(capsys):
    code, _, _ = run(capsys, "cover", "builtin:nothing")
    assert code == 2


def test_bad_flag(capsys):
    assert main(["verify"]) == 2


# --- cover ------------------------------------------------------------------

def test_cover_A2(capsys):
    code, out, _ = run(capsys, "cover", str(DATA / "a2.quiver"))
    assert code == 0
    assert out.startswith("dim cover = 9, simples: 4")


def test_cover_semilocal_morita_note(capsys):
    code, out, _ = run(capsys, "cover", "builtin:M2(GF(5))", "--semilocal")
    assert code == 0 and "Morita" in out


def test_cover_over_q_from_quiver(tmp_path, capsys):
    q = tmp_path / "a2q.quiver"
    q.write_text((DATA / "a2.quiver").read_text().replace("field 5", "field 0"))
    code, out, _ = run(capsys, "cover", str(q))
    assert code == 0 and "field: QQ" in out


def test_capability_error_exit_3(tmp_path, capsys):
    # GF(4) over GF(2) without a declared radical: the trace form is not valid here
    alg = tmp_path / "gf4.alg"
    alg.write_text("algfile v1\nfield 2\ndim 2\nbasis 1 w\nmult 0 0 = 0:1\nmult 0 1 = 1:1\n"
                   "mult 1 0 = 1:1\nmult 1 1 = 0:1,1:1\nunit = 0:1\n")
    code, _, err = run(capsys, "cover", str(alg))
    assert code == 3 and "radical" in err


# --- verify -----------------------------------------------------------------

def test_verify_kk2(capsys):
    code, out, _ = run(capsys, "verify", "builtin:KK2/GF(5)", "--cutoff", "2")
    assert code == 0
    assert "[FAIL]" not in out


def test_verify_A2_asymmetry_line(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "a2.quiver"))
    assert code == 0
    assert "base findim != 0, cover-op findim = 0" in out


def test_verify_corrupted_algfile(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "corrupt.alg"), "--report", "json")
    assert code == 1
    tree = json.loads(out)
    (check,) = [c for c in tree["checks"] if c["id"] == "algebra_axioms"]
    assert check["verdict"] == "fail" and len(check["witness"]["triple"]) == 3


def test_verify_timings_flag(capsys):
    code, out, _ = run(capsys, "verify", "builtin:GF(5)", "--report", "json", "--timings")
    assert code == 0
    assert all("runtime_s" in c for c in json.loads(out)["checks"])


# --- kk ---------------------------------------------------------------------

def test_kk1_relations(capsys):
    code, out, _ = run(capsys, "kk", "--n", "1")
    assert code == 0
    rels = [ln for ln in out.splitlines() if ln.startswith("relation")]
    assert rels == ["relation b1*a1*b1", "relation a1*b1"]


def test_kk2_binomial(capsys):
    code, out, _ = run(capsys, "kk", "--n", "2")
    assert code == 0 and "relation b2*a1 + 4*a2*b2" in out


def test_kk_zero(capsys):
    code, _, _ = run(capsys, "kk", "--n", "0")
    assert code == 2


def test_kk_output_compiles(tmp_path, capsys):
    _, out, _ = run(capsys, "kk", "--n", "2", "--field", "0")
    q = tmp_path / "kk2.quiver"
    q.write_text(out)
    code, out, _ = run(capsys, "compile", str(q))
    assert code == 0 and "dim: 14" in out


# --- resolve ----------------------------------------------------------------

def test_resolve_A2_simple(capsys):
    code, out, _ = run(capsys, "resolve", str(DATA / "a2.quiver"), "--module", "1")
    assert code == 0
    assert "verdict: Finite(1)" in out and "term_dims: [2, 1]" in out


def test_resolve_dual_numbers(capsys):
    code, out, _ = run(capsys, "resolve", "builtin:GF(5)[x]/(x^2)", "--cutoff", "5")
    assert code == 0
    assert "verdict: AtLeast(6)" in out and "periodic" in out


def test_resolve_projective_modfile(tmp_path, capsys):
    a = load_input(str(DATA / "a2.quiver")).algebra
    mf = tmp_path / "reg.mod"
    mf.write_text(format_modfile(regular_module(a)))
    code, out, _ = run(capsys, "resolve", str(DATA / "a2.quiver"), "--module", str(mf))
    assert code == 0 and "verdict: Finite(0)" in out


def test_resolve_bad_module_index(capsys):
    code, _, _ = run(capsys, "resolve", str(DATA / "a2.quiver"), "--module", "7")
    assert code == 2


# --- formats ----------------------------------------------------------------

def test_algfile_roundtrip():
    for e in standard_corpus(include_lambda3=False):
        text = format_algfile(e.algebra)
        b = parse_algfile(text)
        assert b.same_tensor(e.algebra), e.name


@pytest.mark.parametrize("text, line", [
    ("", 0),
    ("modfile v1\n", 1),
    ("algfile v1\nfield 4\n", 2),
    ("algfile v1\nfield 5\ndim 1\nmult 0 0 = 3:1\n", 4),
    ("algfile v1\nfield 5\ndim 1\nmult 0 0 = 0:1\nmult 0 0 = 0:1\n", 5),
    ("algfile v1\nfield 5\ndim 1\nmult 0 0 = 0:1/5\n", 4),
    ("algfile v1\nmult 0 0 = 0:1\n", 2),
    ("algfile v1\nfield 5\ndim 1\nmult 0 0 = 0:1\n", 0),
])
def test_algfile_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_algfile(text)
    assert info.value.line == line


def test_modfile_roundtrip(A2):
    for s in simple_modules(A2):
        m = parse_modfile(format_modfile(s), A2)
        assert all(x == y for x, y in zip(m.action, s.action))


def test_modfile_errors(A2):
    with pytest.raises(FormatError):
        parse_modfile("modfile v1\ndim 1\nact 0 = 1 0\n", A2)
    with pytest.raises(FormatError):
        parse_modfile("modfile v1\nact 0 = 1\n", A2)


# --- reports ----------------------------------------------------------------

@pytest.mark.parametrize("name, argv", GOLDEN_RUNS, ids=[g for g, _ in GOLDEN_RUNS])
def test_golden_reports(name, argv, capsys):
    code, out, _ = run(capsys, *argv)
    path = GOLDEN / name
    if os.environ.get("ASYMCOVER_UPDATE_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


def test_reports_are_deterministic(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "builtin:KK1/GF(5)", "--report", "json", "--seed", "3")
        outs.append(out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "asymcover", "kk", "--n", "1"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and "quiverfile v1" in r.stdout
