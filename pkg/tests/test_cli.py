import io
import json

import pytest

from colourgl.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_tensor_square_all_pass():
    code, text = run("verify", "--sig", "1,1|1,1", "--rep", "tensor:2", "--scope", "all")
    data = json.loads(text)
    assert code == 0 and data["pass"] is True
    assert [r["check"] for r in data["reports"]] == ["super", "klein", "colour"]
    assert [r["checked"] for r in data["reports"]] == [256, 64, 256]
    assert list(data["reports"][0]) == ["check", "sig", "rep", "checked", "violation_count", "violations", "pass"]


def test_verify_m1_zero_colour():
    code, text = run("verify", "--sig", "0,2|2,0", "--rep", "defining", "--scope", "colour")
    assert code == 0 and json.loads(text)["reports"][0]["pass"]


@pytest.mark.parametrize("scope", ["super", "klein", "colour", "all"])
def test_verify_corruption_hook(scope):
    code, text = run("verify", "--sig", "1,1|1,1", "--rep", "tensor:2", "--scope", scope, "--inject-corruption")
    data = json.loads(text)
    assert code == 1 and data["pass"] is False
    assert all(r["violations"] for r in data["reports"])


def test_verify_output_deterministic():
    argv = ("verify", "--sig", "1,1|1,0", "--rep", "tensor:2", "--inject-corruption")
    assert run(*argv) == run(*argv)


def test_verify_all_sigs_small():
    code, text = run("verify", "--all-sigs", "--max-rank", "3")
    data = json.loads(text)
    assert code == 0
    # 4 + 10 + 20 signatures, 2 reps, 3 scopes
    assert len(data["reports"]) == 204


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--sig", "1,1,1|1"),
        ("verify",),
        ("verify", "--sig", "1,1|1,1", "--rep", "tensor:9"),
        ("verify", "--sig", "1,1|1,1", "--scope", "everything"),
        ("verify", "--sig", "1,0|0,0", "--inject-corruption"),
        ("verify", "--sig", "9,0|8,0", "--rep", "tensor:3"),
        ("casimir", "--sig", "1,1|1,1", "--variant", "bogus"),
        ("frobnicate",),
        ("regions", "--all-sigs", "--max-rank", "0"),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_structure_flips():
    code, text = run("structure", "--sig", "1,1|1,1", "--which", "flips")
    records = [json.loads(line) for line in text.splitlines()]
    flips = [tuple(map(tuple, r["flip"])) for r in records]
    assert code == 0
    assert ((1, 3), (4, 1)) in flips and ((2, 1), (1, 3)) in flips
    assert all(r["super_exponent"] != r["colour_exponent"] for r in records)


def test_structure_flips_degenerate_empty():
    code, text = run("structure", "--sig", "2,0|2,0", "--which", "flips")
    assert code == 0 and text == ""


def test_structure_colour_dump():
    code, text = run("structure", "--sig", "1,1|1,1", "--which", "colour")
    records = [json.loads(line) for line in text.splitlines()]
    # brute-force count of quadruples with a nonvanishing colour bracket
    from itertools import product

    from colourgl import GradedSignature, colour_structure

    sig = GradedSignature(1, 1, 1, 1)
    nonzero = [q for q in product(range(1, 5), repeat=4) if colour_structure(sig, *q)]
    assert len(records) == len(nonzero) < 256
    rec = next(r for r in records if r["bracket"] == [[1, 3], [4, 1]])
    assert rec == {"sig": "1,1|1,1", "bracket": [[1, 3], [4, 1]], "sign_exponent": 0, "result": [["-1/1", [4, 3]]]}


def test_structure_super_dump():
    code, text = run("structure", "--sig", "2,0|2,0", "--which", "super")
    rec = next(json.loads(l) for l in text.splitlines() if json.loads(l)["bracket"] == [[1, 3], [4, 1]])
    assert rec["sign_exponent"] == 1 and rec["result"] == [["1/1", [4, 3]]]


def test_regions_table():
    code, text = run("regions", "--sig", "1,1|1,1")
    assert code == 0
    rows = [line.split()[1:] for line in text.splitlines()[2:]]
    assert rows == [list("aabd"), list("aabd"), list("eeac"), list("ggfa")]


def test_regions_m1_zero_json():
    code, text = run("regions", "--sig", "0,2|2,0", "--format", "json")
    grid = json.loads(text)["regions"]
    assert grid == [list("aabb"), list("aabb"), list("eeaa"), list("eeaa")]


def test_casimir_column_degree():
    code, text = run("casimir", "--sig", "1,1|1,1", "--variant", "column-degree")
    obj = json.loads(text)
    assert code == 0
    assert obj["central"] is True and obj["scalar"] == "0/1" and obj["hw_formula"] == "0/1"


def test_casimir_paper_literal_noncentral():
    code, text = run("casimir", "--sig", "2,1|1,0", "--variant", "paper-literal")
    obj = json.loads(text)
    assert code == 1 and obj["central"] is False and obj["scalar"] is None


def test_casimir_all_sigs_list():
    code, text = run("casimir", "--all-sigs", "--max-rank", "2", "--variant", "column-degree")
    data = json.loads(text)
    assert code == 0 and len(data) == 14


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "colourgl", "regions", "--sig", "1,0|1,0"], capture_output=True, text=True)
    assert proc.returncode == 0 and "a b" in proc.stdout
