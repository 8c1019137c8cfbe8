import json
import random
from fractions import Fraction

import pytest

from tropline.cli import main
from tropline.errors import ParseError
from tropline.io import (
    complex_from_json,
    complex_to_json,
    fraction_to_json,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    parse_matrix,
)
from tropline.trop_core import TropicalMatrix, tropical_rank_bruteforce


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_rational_serialisation():
    assert fraction_to_json(3) == 3
    assert fraction_to_json(Fraction(6, 4)) == "3/2"
    assert fraction_to_json(Fraction(-4, 2)) == -2


def test_matrix_round_trips():
    M = TropicalMatrix(((0, Fraction(1, 2)), (Fraction(-7, 3), 4)))
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(M)))) == M
    assert parse_matrix(matrix_to_csv(M)) == M


@pytest.mark.parametrize("text", [
    '{"rows": 2, "cols": 1, "entries": [[0]]}',
    '{"rows": 1, "cols": 1, "entries": [[0.5]]}',
    '{"rows": 1, "cols": 1',
    "1,2\n3\n",
    "1,abc\n",
    "1.5,2\n",
    "",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_complex_json_round_trip(cx):
    K = cx(3, 3, "B")
    L = complex_from_json(json.loads(json.dumps(complex_to_json(K))))
    assert L.facets == K.facets and L.vertices == K.vertices
    with pytest.raises(ParseError):
        complex_from_json({"facets": [[0, 5]], "vertices": [[[0]]]})


def test_rank_rank_one(tmp_path, capsys):
    p = write(tmp_path, "m.json", '{"rows": 3, "cols": 2, "entries": [[0, 0], [1, 1], [2, 2]]}')
    code, out = run(capsys, "rank", p)
    assert code == 0 and json.loads(out)["results"]["tropical_rank"] == 1


def test_rank_of_the_123_sample(tmp_path, capsys):
    p = write(tmp_path, "m.csv", "1,0,0\n0,1,0\n0,0,1\n")
    code, out = run(capsys, "rank", p)
    r = json.loads(out)["results"]
    assert (r["tropical_rank"], r["barvinok_rank_le2"]) == (2, False)


def test_rank_random_four_by_four(tmp_path, capsys):
    rng = random.Random(1)
    for k in range(10):
        rows = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)]
        p = write(tmp_path, f"r{k}.csv", "\n".join(",".join(map(str, r)) for r in rows))
        _, out = run(capsys, "rank", p)
        assert json.loads(out)["results"]["tropical_rank"] == tropical_rank_bruteforce(rows)


def test_line_outputs(tmp_path, capsys):
    p = write(tmp_path, "m.csv", "0,1,0\n0,0,1\n0,0,0\n")
    code, out = run(capsys, "line", p, "--label")
    assert code == 0 and json.loads(out)["results"]["label"] == "012"
    code, out = run(capsys, "line", p, "--format", "dot")
    assert out.startswith("graph line {")
    code, _ = run(capsys, "line", p, "--format", "csv")
    assert code == 2


def test_line_rank_one_is_an_error(tmp_path, capsys):
    p = write(tmp_path, "m.csv", "0,0\n0,0\n0,0\n")
    assert run(capsys, "line", p)[0] == 2


def test_json_output_is_byte_identical(tmp_path, capsys):
    p = write(tmp_path, "m.csv", "0,1,0,2\n0,0,1,1\n0,0,0,0\n")
    outs = {run(capsys, "line", p, "--label")[1] for _ in range(3)}
    assert len(outs) == 1


def test_complex_homology_fvector_pipeline(tmp_path, capsys):
    out = tmp_path / "b.json"
    assert run(capsys, "complex", "--d", "3", "--n", "4", "--variant", "B", "--refined", "--out", str(out))[0] == 0
    data = json.loads(out.read_text())
    assert set(data) == {"vertices", "facets"}
    code, text = run(capsys, "homology", str(out))
    groups = json.loads(text)
    assert [g["betti"] for g in groups] == [0, 1, 0, 0] and groups[2]["torsion"] == [2]
    code, text = run(capsys, "fvector", str(out), "--format", "csv")
    assert text.splitlines()[0] == "0,1,2,3"


def test_unrefined_complex_cells(tmp_path, capsys):
    out = tmp_path / "t.json"
    run(capsys, "complex", "--d", "4", "--n", "4", "--out", str(out), "--threads", "1")
    data = json.loads(out.read_text())
    assert len(data["facets"]) == 1392 and len(data["vertices"]) == 58


def test_shell(capsys):
    code, out = run(capsys, "shell", "--n", "4")
    assert code == 0 and out.startswith("PASS")
    code, out = run(capsys, "shell", "--n", "3", "--remove", "1,3", "--format", "json")
    assert json.loads(out)["results"]["removed"] == ["111", "333"]
    assert run(capsys, "shell", "--n", "3", "--remove", "4")[0] == 2


def test_classes(capsys):
    code, out = run(capsys, "classes", "intersect", "13", "31")
    assert json.loads(out)["intersection"] == "EMPTY"
    code, out = run(capsys, "classes", "list", "--n", "2")
    assert {e["string"] for e in json.loads(out)} >= {"12", "AB", "CC"}
    assert run(capsys, "classes", "intersect", "12")[0] == 2
    assert run(capsys, "classes", "dim", "1Q")[0] == 2


def test_verify_usage(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "d5"])
    assert e.value.code == 2


def test_missing_file(capsys):
    assert run(capsys, "homology", "/nonexistent.json")[0] == 2
