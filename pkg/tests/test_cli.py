import json

import pytest

from gliderbs import jsonio
from gliderbs.cli import main
from gliderbs.fields import padic
from gliderbs.filtration import AlgebraFiltration, valuation_filtration
from gliderbs.gbs import realize_field_element
from gliderbs.lattice import matrix_algebra
from gliderbs.orders import builtin_mnr
from gliderbs.rank2 import realize_z2


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("cli")
    f5 = valuation_filtration(padic(5))
    order = builtin_mnr(2, f5.base_ring)
    fa = AlgebraFiltration(matrix_algebra(2), f5, order.lattice,
                           mode="induced")
    paths = {}

    def put(name, obj):
        p = tmp / name
        p.write_text(jsonio.dumps(obj) if isinstance(obj, dict)
                     else json.dumps(obj))
        paths[name] = str(p)

    put("fv5.json", jsonio.encode_filtration(f5))
    put("fa.json", jsonio.encode_filtration(fa))
    put("g0.json", jsonio.encode_glider(realize_field_element(f5, 0)))
    put("gm1.json", jsonio.encode_glider(realize_field_element(f5, -1)))
    put("points.json", {"schema": "gbs/1", "field": "Q",
                        "points": [["1", "0"], ["0", "1"]]})
    put("ext.json", {"schema": "gbs/1", "minpoly": "t^2+1",
                     "valuation": {"over": "5", "kind": "split",
                                   "factor": "2+i"}})
    put("z2.json", jsonio.encode_z2(realize_z2((1, -1))))
    ident = [["1", "0", "0", "0"], ["0", "1", "0", "0"],
             ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
    put("sample.json", {
        "schema": "gbs/1",
        "filtration": jsonio.encode_filtration(f5),
        "algebra": {"kind": "matrix", "n": 2},
        "elements": [
            {"prefix": [{"rows": ident}], "tail": {"kind": "filtration"}},
            {"prefix": [{"rows": [[str(5 * int(c)) for c in row]
                                  for row in ident]}],
             "tail": {"kind": "filtration"}},
        ]})
    put("bad.json", {"schema": "gbs/1", "phi": {}, "oops": True})
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_field_enum(files, capsys):
    code, out = run(capsys, "field-enum", "--filtration",
                    files["fv5.json"], "--window", "-1:1")
    assert code == 0
    assert "3 element(s)" in out


def test_field_enum_json_deterministic(files, capsys):
    args = ("--output", "json", "field-enum", "--filtration",
            files["fv5.json"], "--window", "-3:3")
    code1, out1 = run(capsys, *args)
    code2, out2 = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    report = json.loads(out1)
    assert report["schema"] == "gbs/1"
    assert len(report["results"]) == 7
    assert report["citations"] == ["field.dvr-enumeration"]
    assert "timing" not in report


def test_classify(files, capsys):
    code, out = run(capsys, "--output", "json", "classify", "--glider",
                    files["g0.json"])
    assert code == 0
    assert json.loads(out)["results"]["verdict"] == "irreducible"


def test_subglider(files, capsys):
    code, out = run(capsys, "--output", "json", "subglider", "--sub",
                    files["gm1.json"], "--glider", files["g0.json"])
    assert code == 0
    assert json.loads(out)["results"]["kind"] == "T3"


def test_csa_enum(files, capsys):
    code, out = run(capsys, "csa-enum", "--filtration", files["fa.json"],
                    "--points", files["points.json"], "--window", "0:1")
    assert code == 0 and "4 element(s)" in out


def test_strong_and_estep(files, capsys):
    code, out = run(capsys, "--output", "json", "strong-check",
                    "--filtration", files["fv5.json"])
    assert code == 0 and json.loads(out)["results"]["strong"] is True
    code, out = run(capsys, "--output", "json", "estep", "--filtration",
                    files["fv5.json"])
    assert code == 0 and json.loads(out)["results"]["estep"] == 1


def test_maxorder_check(files, capsys):
    code, out = run(capsys, "maxorder-check", "--order", "hurwitz2",
                    "--k", "1")
    assert code == 0 and "not strong" in out
    code, out = run(capsys, "maxorder-check", "--order", "hurwitz2",
                    "--k", "2")
    assert code == 0 and out.strip() == "strong"


def test_ceil_table(files, capsys):
    code, out = run(capsys, "--output", "json", "ceil-table", "--e", "2",
                    "--window", "-2:2")
    assert code == 0
    table = json.loads(out)["results"]["table"]
    assert table[3][3] == "strict"  # k = l = 1


def test_brandt_verify(files, capsys):
    code, out = run(capsys, "brandt", "verify", "--sample",
                    files["sample.json"])
    assert code == 0
    assert out.count("pass") == 5


def test_rank2_classify(files, capsys):
    code, out = run(capsys, "--output", "json", "rank2", "classify",
                    "--glider", files["z2.json"])
    assert code == 0
    assert json.loads(out)["results"]["shift"] == [1, -1]


def test_tensor_map(files, capsys):
    code, out = run(capsys, "--output", "json", "tensor-map", "--ext",
                    files["ext.json"], "--filtration", files["fa.json"],
                    "--points", files["points.json"], "--shift", "0")
    assert code == 0
    results = json.loads(out)["results"]
    assert len(results) == 2
    assert all(r["image"]["shift"] == 0 for r in results)


def test_roundtrip_command(files, capsys):
    code, out = run(capsys, "roundtrip", files["fa.json"])
    assert code == 0


def test_schema_error_exit_code(files, capsys):
    code, _ = run(capsys, "classify", "--glider", files["bad.json"])
    assert code == 1


def test_usage_error_exit_code(files, capsys):
    assert main(["field-enum", "--filtration", files["fv5.json"]]) == 2
    assert main(["no-such-command"]) == 2


def test_missing_file_is_domain_error(capsys):
    code, _ = run(capsys, "strong-check", "--filtration", "/nope.json")
    assert code == 1
