import json
import subprocess
import sys

import pytest

from ncubical.cli import run_cli
from ncubical.cubical import CubicalComplex
from ncubical.fixtures import altshuler_sequence, pentagon_sphere
from ncubical.io import (
    ParseError,
    cubical_from_json,
    cubical_to_json,
    parse_complex,
    parse_cubical,
    parse_sequence,
    parse_simplicial,
    serialize,
    serialize_sequence,
    serialize_simplicial,
)
from ncubical.simplicial import SimplicialComplex

A10_ROW = """\
01239 01269 01359 01459 01489 01679 02369 03569 04569 04679 13459 13489 23459 23489
23579 23679 24589 25789 26789 35679 45679
"""


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- parsing --------------------------------------------------------------------------


def test_cubical_round_trip():
    text = "000+--\n00+0+-\n"
    assert serialize(parse_complex(text)) == text


def test_cubical_canonical_order():
    assert serialize(parse_complex("00+0+-\n000+--\n")) == "000+--\n00+0+-\n"


def test_ambiguous_digit_string():
    with pytest.raises(ParseError) as info:
        parse_simplicial("01234\n")
    assert info.value.lineno == 1
    as_vertices = parse_simplicial("01234\n", encoding="vertices")
    assert as_vertices.facets == {0b11111}
    with pytest.raises(ParseError):
        parse_simplicial("01234\n", encoding="complement")


def test_complement_vectors_autodetected():
    c = parse_simplicial("00110\n10010\n11000\n")
    assert c == SimplicialComplex.from_complements(["00110", "10010", "11000"])
    assert serialize_simplicial(c) == "00110\n10010\n11000\n"


def test_vertex_lists_and_index_base():
    c = parse_simplicial("1 2 5\n2,3,5\n3 4 5\n", index_base=1)
    assert c.vertex_lists() == [(0, 1, 4), (1, 2, 4), (2, 3, 4)]
    assert serialize_simplicial(c, "vertices", 1) == "1 2 5\n2 3 5\n3 4 5\n"


def test_table_row_with_index_base_0():
    c = parse_simplicial(A10_ROW.replace(" ", "\n"), encoding="vertices", index_base=0)
    assert len(c.facets) == 21
    assert c == altshuler_sequence().ball(10)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_cubical("000+--\n# comment\n00+x+-\n")
    assert info.value.lineno == 3
    with pytest.raises(ParseError) as info:
        parse_cubical("000+--\n00+0+\n")
    assert info.value.lineno == 2
    with pytest.raises(ParseError):
        parse_simplicial("0 0 1\n")
    with pytest.raises(ParseError):
        parse_simplicial("# nothing\n")
    with pytest.raises(ParseError):
        parse_simplicial("0011\n001\n")


def test_json_round_trip():
    s = pentagon_sphere()
    doc = cubical_to_json(s)
    assert doc["f_vector"] == [64, 192, 192, 64]
    assert cubical_from_json(json.dumps(doc)) == s


def test_sequence_round_trip(pentagon_seq):
    text = serialize_sequence(pentagon_seq.balls)
    assert parse_sequence(text) == list(pentagon_seq.balls)
    listed = "0 1 2\n\n0 1 3\n1 2 3\n\n0 1 4\n1 2 4\n2 3 4\n"
    assert parse_sequence(listed) == list(pentagon_seq.balls)


# -- CLI ------------------------------------------------------------------------------------


def test_bbc_build_cyclic(capsys):
    code, out, _ = run(capsys, "bbc", "build", "--seq", "cyclic:3,6", "--mode", "both")
    assert code == 0
    assert "facets: 64" in out.splitlines()
    assert "paths agree: true" in out.splitlines()
    assert "types: 3:2 2:6 1:16 0:40" in out


def test_bbc_build_altshuler_fvector(capsys):
    code, out, _ = run(capsys, "bbc", "build", "--seq", "altshuler", "--mode", "direct", "--fvector")
    assert code == 0
    assert "f-vector: (2048, 11264, 28160, 33280, 17920, 3584)" in out


def test_bbc_build_json_report_and_export(capsys, tmp_path):
    out_path = tmp_path / "s6.json"
    code, out, _ = run(
        capsys, "bbc", "build", "--seq", "pentagon", "--check", "--report", "json",
        "--export", "json", "--out", str(out_path),
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"command", "params", "f_vector", "euler", "checks", "facets_path"}
    assert report["checks"]["closed_pseudomanifold"] is True
    assert report["checks"]["cubically_2_neighborly"] is True
    assert cubical_from_json(out_path.read_text()) == pentagon_sphere()


def test_bbc_build_from_file(capsys, tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("000\n\n0010\n1000\n\n00110\n10010\n11000\n")
    code, out, _ = run(capsys, "bbc", "build", "--seq", str(p), "--mode", "both")
    assert code == 0
    assert "facets: 64" in out


def test_bbc_validate_reports_code(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 2 3\n\n1 2 4\n2 3 4\n\n1 2 5\n1 3 5\n3 4 5\n")
    code, out, _ = run(capsys, "bbc", "validate", "--seq", str(p), "--index-base", "1")
    assert code == 1
    assert "B_NOT_IN_BOUNDARY(5)" in out
    code, out, _ = run(capsys, "bbc", "validate", "--seq", "altshuler")
    assert code == 0 and "d=5, n=11" in out


def test_usage_errors(capsys):
    assert run(capsys, "bbc", "build", "--seq", "cyclic:3")[0] == 2
    assert run(capsys, "bbc", "build", "--seq", "no/such/file")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "surface", "--q", "2")[0] == 2
    assert run(capsys, "ncp", "facets", "--n", "3", "--d", "3")[0] == 2
    code, _, err = run(capsys, "verify", "--in", "/nonexistent")
    assert code == 2 and err.startswith("error:")


def test_ncp_facets(capsys):
    code, out, _ = run(capsys, "ncp", "facets", "--n", "11", "--d", "5", "--count-only")
    assert code == 0
    assert out.splitlines() == ["facets: 3584", "closed form: 3584"]


def test_phi_command_maps_direct_onto_cge(capsys, tmp_path):
    src = tmp_path / "s6.txt"
    run(capsys, "bbc", "build", "--seq", "cyclic:3,6", "--out", str(src))
    code, out, _ = run(capsys, "phi", "--in", str(src))
    assert code == 0
    code2, cge, _ = run(capsys, "ncp", "facets", "--n", "6", "--d", "3")
    assert out == cge
    code3, out3, _ = run(capsys, "ncp", "phi", "--in", str(src))
    assert out3 == out


def test_verify_command(capsys, tmp_path):
    src = tmp_path / "s6.txt"
    src.write_text("".join(f"{f}\n" for f in pentagon_sphere().sorted_facets()))
    code, out, _ = run(capsys, "verify", "--in", str(src), "--homology", "--links")
    assert code == 0
    assert "betti (Z/2): (1, 0, 0, 1)" in out
    ball = tmp_path / "ball.txt"
    ball.write_text("000\n")
    assert run(capsys, "verify", "--in", str(ball))[0] == 1
    code, out, _ = run(capsys, "verify", "--in", str(src), "--report", "json")
    assert json.loads(out)["euler"] == 0


def test_surface_command(capsys, tmp_path):
    code, out, _ = run(capsys, "surface", "--q", "12", "--genus")
    assert code == 0
    assert "genus: 4097" in out.splitlines()
    code, out, _ = run(capsys, "surface", "--q", "5", "--check")
    assert code == 0 and "orientable: true" in out and "subcomplex of S3(5): true" in out
    off = tmp_path / "m45.off"
    assert run(capsys, "surface", "--q", "5", "--export", "off", "--out", str(off))[0] == 0
    assert off.read_text().splitlines()[1] == "32 40 0"


def test_iso_command(capsys, tmp_path):
    seq = altshuler_sequence()
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    c = tmp_path / "c.txt"
    a.write_text(serialize_simplicial(seq.boundary(9), "vertices"))
    b.write_text(serialize_simplicial(seq.boundary(9).relabel([8, 7, 6, 5, 4, 3, 2, 1, 0]), "vertices"))
    c.write_text(serialize_simplicial(seq.boundary(10), "vertices"))
    assert run(capsys, "iso", str(a), str(b))[1] == "isomorphic: true\n"
    assert run(capsys, "iso", str(a), str(c))[0] == 1
    assert run(capsys, "iso", str(a), str(b), "--budget", "1")[0] == 1


def test_fixtures_command(capsys):
    code, out, _ = run(capsys, "fixtures", "check")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "fixtures", "list")
    assert {line.split("\t")[0] for line in out.splitlines()} == {"pentagon", "pentagon-sphere", "altshuler"}
    code, out, _ = run(capsys, "fixtures", "show", "altshuler")
    assert out.startswith("A5")
    assert run(capsys, "fixtures", "show", "nope")[0] == 2


def test_output_is_deterministic(capsys):
    argv = ["bbc", "build", "--seq", "cyclic:4,8", "--mode", "both", "--fvector", "--check", "--report", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "ncubical", "ncp", "facets", "--n", "7", "--d", "4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert len(a.splitlines()) == len(CubicalComplex.from_strings(a.decode().split()).facets)
