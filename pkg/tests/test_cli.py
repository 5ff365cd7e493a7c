import json
import subprocess
import sys

import pytest

import paper_data as pd
from quasiortho.cli import main
from quasiortho.document import MatrixDocument, PALETTE
from quasiortho.latin import SupportSetMatrix
from quasiortho.orthogen import search_table


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def paper_p(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(MatrixDocument.from_supports(SupportSetMatrix.from_columns(pd.columns_of(pd.P))).dumps())
    return path


@pytest.fixture
def paper_q(tmp_path):
    doc = MatrixDocument("quasi-binary", 8, tuple(map(tuple, pd.columns_of(pd.P))), 7, 13, 4, 0x19)
    path = tmp_path / "q.json"
    path.write_text(doc.dumps())
    return path


def test_gen_json_verifies(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", "8", "--seed", "1", "--format", "json")
    assert code == 0
    doc = MatrixDocument.loads(out)
    assert doc.kind == "binary-supports" and doc.seed == 1 and doc.n == 8
    path = tmp_path / "g.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.startswith("PASS")


def test_gen_deterministic(capsys):
    first = run(capsys, "gen", "--n", "16", "--seed", "7")[1]
    assert run(capsys, "gen", "--n", "16", "--seed", "7")[1] == first


def test_gen_missing_triplet(capsys):
    code, _, err = run(capsys, "gen", "--n", "10")
    assert code == 2
    assert "TripletNotFound" in err


def test_gen_quasi(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", "8", "--seed", "1", "--a", "7", "--b", "13", "--m", "4", "--poly", "0x19")
    assert code == 0
    doc = MatrixDocument.loads(out)
    assert doc.kind == "quasi-binary" and (doc.a, doc.b, doc.field_poly) == (7, 13, 25)
    assert {v for row in doc.entries() for v in row} == {7, 13}
    path = tmp_path / "q.json"
    path.write_text(out)
    assert run(capsys, "verify", str(path))[0] == 0


def test_gen_dense(capsys):
    code, out, _ = run(capsys, "gen", "--n", "8", "--seed", "1", "--a", "7", "--b", "13", "--m", "4", "--poly", "25", "--format", "dense")
    assert code == 0
    rows = [list(map(int, l.split())) for l in out.splitlines()]
    assert len(rows) == 8 and all(set(r) <= {7, 13} for r in rows)


@pytest.mark.parametrize(
    "extra, name",
    [
        (["--a", "7", "--b", "7", "--m", "4", "--poly", "0x19"], "BadPair"),
        (["--a", "7", "--b", "13", "--m", "4", "--poly", "0x11"], "ReduciblePolynomial"),
        (["--a", "7"], "QuasiOrthoError"),
    ],
)
def test_gen_errors(capsys, extra, name):
    code, _, err = run(capsys, "gen", "--n", "8", *extra)
    assert code == 2 and name in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen"])
    assert exc.value.code == 2


def test_invert_paper(capsys, paper_q, tmp_path):
    code, out, _ = run(capsys, "invert", str(paper_q))
    assert code == 0
    inv = MatrixDocument.loads(out)
    assert (inv.a, inv.b, inv.inverse) == (4, 15, True)
    assert inv.entries() == pd.P_4_15
    path = tmp_path / "inv.json"
    path.write_text(out)
    code, out, _ = run(capsys, "invert", str(path))
    assert out == paper_q.read_text()


def test_invert_binary_is_transpose(capsys, paper_p):
    code, out, _ = run(capsys, "invert", str(paper_p))
    doc = MatrixDocument.loads(out)
    assert doc.entries() == [list(r) for r in zip(*pd.P)]


def test_invert_malformed(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{oops")
    code, _, err = run(capsys, "invert", str(path))
    assert code == 2 and "ParseError" in err


def test_invert_output_file(capsys, paper_q, tmp_path):
    target = tmp_path / "out.json"
    assert run(capsys, "invert", str(paper_q), "-o", str(target))[0] == 0
    assert json.loads(target.read_text())["a"] == 4


def test_verify_paper_and_corrupted(capsys, paper_p, paper_q, tmp_path):
    assert run(capsys, "verify", str(paper_p))[0] == 0
    assert run(capsys, "verify", str(paper_q))[0] == 0
    doc = json.loads(paper_p.read_text())
    doc["columns"][0] = doc["columns"][0][1:]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and out.startswith("FAIL")


def test_verify_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "nope.json"))[0] == 2


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--min", "8", "--max", "256")
    assert code == 0
    assert [tuple(map(int, l.split("\t"))) for l in out.splitlines()] == pd.TABLE
    assert run(capsys, "search", "--min", "10", "--max", "10")[:2] == (0, "")
    assert run(capsys, "search", "--min", "8", "--max", "8", "--format", "csv")[1] == "8,3,2\n"


def test_render(capsys, tmp_path, paper_q):
    ident = tmp_path / "i.json"
    ident.write_text(MatrixDocument.from_supports(SupportSetMatrix.identity(8)).dumps())
    pbm = tmp_path / "i.pbm"
    assert run(capsys, "render", str(ident), str(pbm))[0] == 0
    assert pbm.read_bytes().startswith(b"P1\n8 8\n1 0 0")

    ppm = tmp_path / "q.ppm"
    assert run(capsys, "render", str(paper_q), str(ppm))[0] == 0
    data = ppm.read_bytes()
    assert data.startswith(b"P6\n8 8\n255\n")
    body = data[len(b"P6\n8 8\n255\n"):]
    assert tuple(body[:3]) == PALETTE["a"] and tuple(body[3:6]) == PALETTE["b"]

    inv = tmp_path / "inv.json"
    run(capsys, "invert", str(paper_q), "-o", str(inv))
    run(capsys, "render", str(inv), str(ppm))
    body = ppm.read_bytes()[len(b"P6\n8 8\n255\n"):]
    assert {tuple(body[i:i + 3]) for i in range(0, len(body), 3)} == {PALETTE["c"], PALETTE["d"]}


def test_bench_smoke(capsys):
    code, out, _ = run(capsys, "bench", "--n", "8", "--reps", "1")
    assert code == 0
    assert "support-set path" in out and "naive matmul path" in out


def test_bench_missing_triplet(capsys):
    code, _, err = run(capsys, "bench", "--n", "10")
    assert code == 2 and "TripletNotFound" in err


@pytest.mark.parametrize("n", [t[0] for t in search_table(8, 64)])
def test_gen_verify_pipeline(capsys, tmp_path, n):
    for seed in range(3):
        path = tmp_path / f"{n}_{seed}.json"
        assert run(capsys, "gen", "--n", str(n), "--seed", str(seed), "-o", str(path))[0] == 0
        assert run(capsys, "verify", str(path))[0] == 0


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "quasiortho", "search", "--min", "8", "--max", "12", "--format", "csv"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "8,3,2\n12,3,3\n"
