import json

import pytest

from doobcodes import cli, formats
from doobcodes.additive import build_D, expand_matrix, special_d77
from doobcodes.linear import build_check_matrix
from doobcodes.product import ProductCodeSpec


def _codes():
    A02 = build_check_matrix(0, 2)
    return [build_check_matrix(0, 1), build_check_matrix(1, 1), expand_matrix(A02),
            build_D(A02, (1, 4)), special_d77(), ProductCodeSpec.row_major(1, 5, 3),
            ProductCodeSpec(1, 5, ((0, 0), (0, 4)))]


@pytest.mark.parametrize("code", _codes(), ids=lambda c: type(c).__name__)
def test_round_trip(code, tmp_path):
    text = formats.dumps(code)
    assert formats.loads(text) == code
    path = tmp_path / "code.json"
    formats.save(code, path)
    assert formats.load(path) == code
    assert formats.dumps(formats.load(path)) == text


def test_one_column_per_line():
    text = formats.dumps(build_check_matrix(0, 1))
    assert '    ["01"],\n    ["12"]\n' in text


def test_d77_data_file():
    assert formats.d77_data_file() == formats.dumps(special_d77())
    assert formats.loads(formats.d77_data_file()) == formats.builtin("d77")
    assert json.loads(formats.d77_data_file())["family"] == "special-d77"


def test_one_digit_tokens():
    doc = json.loads(formats.dumps(build_check_matrix(0, 1)))
    doc["a_star"][0] = ["1"]
    assert formats.from_document(doc) == build_check_matrix(0, 1)


@pytest.mark.parametrize("edit", [
    lambda d: d.update(format="other/1"),
    lambda d: d.update(family="mystery"),
    lambda d: d.pop("a_prime"),
    lambda d: d["a_star"].append(["01", "00"]),
])
def test_format_errors(edit):
    doc = json.loads(formats.dumps(build_check_matrix(0, 1)))
    edit(doc)
    with pytest.raises(formats.FormatError):
        formats.from_document(doc)


def test_additive_shape_mismatch():
    doc = json.loads(formats.dumps(special_d77()))
    doc["m"] = 6
    with pytest.raises(formats.FormatError):
        formats.from_document(doc)


def _golden_table(golden_dir):
    sections, current = {}, None
    for line in (golden_dir / "params_mu1to4.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        if line.startswith("mu="):
            current = sections.setdefault(int(line[3:]), [])
        else:
            current.append(line)
    return sections


def test_params_table_matches_golden(golden_dir):
    for mu, rows in _golden_table(golden_dir).items():
        got = [l for l in cli.params_table(mu).splitlines()[2:]]
        assert got == rows, f"mu={mu}"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_params(capsys):
    code, out, _ = run(capsys, "params", "--mu", "3")
    assert code == 0
    open_ms = [int(l.split("\t")[0]) for l in out.splitlines()[2:] if l.endswith("open")]
    assert open_ms == [6, 9, 10]
    code, out, _ = run(capsys, "params", "-m", "8", "--n2", "1", "--n4", "4")
    assert code == 0 and "(0,3)" in out
    assert run(capsys, "params", "-m", "1", "-n", "4")[0] == 2
    assert run(capsys, "params", "-m", "10", "--n2", "1", "--n4", "0")[0] == 2
    assert run(capsys, "params", "--mu", "0")[0] == 2
    assert run(capsys, "params")[0] == 2


def test_cli_build_verify_decode(capsys, tmp_path):
    path = tmp_path / "a01.json"
    assert run(capsys, "build", "linear", "--gamma", "0", "--delta", "1", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "PASS" in out
    report = tmp_path / "rep.json"
    assert run(capsys, "verify", str(path), "--mode", "exhaustive", "-o", str(report))[0] == 0
    assert json.loads(report.read_text())["verdict"] == "pass"
    code, out, _ = run(capsys, "decode", str(path), "30,00|1")
    assert code == 0 and out.strip().endswith("distance=1")
    code, out, _ = run(capsys, "enumerate", str(path))
    assert code == 0 and len(out.splitlines()) == 64
    assert run(capsys, "decode", str(path), "30|1")[0] == 2


def test_cli_other_families(capsys, tmp_path):
    for argv, name in [(["additive", "--gamma", "0", "--delta", "2", "--n4", "6"], "d.json"),
                       (["special-d77"], "d77.json"),
                       (["product", "--k", "1", "--r", "1", "-m", "1"], "p.json")]:
        path = tmp_path / name
        assert run(capsys, "build", *argv, "-o", str(path))[0] == 0
    assert run(capsys, "verify", str(tmp_path / "d.json"))[0] == 0
    assert run(capsys, "verify", str(tmp_path / "d77.json"))[0] == 0
    code, out, _ = run(capsys, "verify", str(tmp_path / "p.json"), "--mode", "exhaustive")
    assert code == 0 and "codewords=64" in out
    code, out, _ = run(capsys, "verify", str(tmp_path / "p.json"), "--sample", "200")
    assert code == 0 and "sampled: PASS" in out
    assert run(capsys, "verify", str(tmp_path / "p.json"), "--mode", "coverage")[0] == 2
    code, out, _ = run(capsys, "enumerate", str(tmp_path / "p.json"))
    assert code == 0 and len(out.splitlines()) == 64
    code, out, _ = run(capsys, "decode", str(tmp_path / "d77.json"), "|".join(["00," * 6 + "00", "", "1,0,0,0,0,0,0"]))
    assert code == 0 and "distance=1" in out
    assert run(capsys, "build", "additive", "--gamma", "0", "--delta", "2", "--n4", "4")[0] == 2
    assert run(capsys, "build", "linear", "--gamma", "0")[0] == 2


def test_cli_enumerate_refuses_large(capsys, tmp_path):
    path = tmp_path / "a11.json"
    run(capsys, "build", "linear", "--gamma", "1", "--delta", "1", "-o", str(path))
    code, _, err = run(capsys, "enumerate", str(path))
    assert code == 2 and "cap" in err


def test_cli_verify_failure_exit(capsys, tmp_path):
    doc = json.loads(formats.dumps(build_check_matrix(0, 1)))
    doc["a_star"][1] = ["01"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and "FAIL" in out


def test_cli_bad_file(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"format": "nope"}')
    assert run(capsys, "verify", str(path))[0] == 2


def test_cli_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "absent.json"))
    assert code == 2 and err.startswith("error:")
