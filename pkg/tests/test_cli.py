import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from schubpuzzle.cli import ParseError, parse_boundary, run
from schubpuzzle.region import InfeasibleShape, content_feasible


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_count():
    assert call("count", "--pieces", "H", "--boundary", "tri:1010,0101,0011") == (0, "1\n", "")
    assert call("count", "--json", "--boundary", "tri:1010,0101,0011")[1] == '{"count":1}\n'


def test_weight():
    assert call("weight", "--pieces", "H+eqvt", "--boundary", "tri:10,10,01")[1] == "y2 - y1\n"
    code, out, _ = call("weight", "--json", "--pieces", "H+eqvt", "--boundary", "tri:10,10,01")
    terms = json.loads(out)["value"]["terms"]
    assert [t["coeff"] for t in terms] == [1, -1]


def test_enumerate_is_json_lines_and_thread_independent():
    args = ["enumerate", "--boundary", "hex:01,01,01,01,01,01"]
    code, one, _ = call(*args)
    assert code == 0
    lines = one.splitlines()
    assert len(lines) == 2 and [json.loads(x)["index"] for x in lines] == [0, 1]
    assert call(*args, "--threads", "4")[1] == one


def test_lr():
    assert call("lr", "0101", "0101", "1001")[1] == "1\n"
    assert call("lr", "--padded", "10", "10", "0101")[1] == call("lr", "0101", "0101", "0101")[1]
    assert call("lr", "--padded", "-", "-", "01")[1] == "1\n"
    assert call("lr", "--padded", "-", "-", "10")[1] == "0\n"


def test_verify_single_and_sweep():
    code, out, _ = call("verify", "HEX_ALLWAY_COUNT", *(f"{k}=01" for k in
                        ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")))
    assert code == 0 and out.startswith("PASS")
    code, out, _ = call("verify", "HEX_ALLWAY_COUNT", "--sweep", "--max-size", "3")
    assert code == 0 and out.rstrip().endswith("passed")
    code, out, _ = call("verify", "UNIQUE_PENTAGON", "--sweep", "--max-size", "1", "--json")
    doc = json.loads(out)
    assert doc["pass"] is True and all(r["pass"] for r in doc["reports"])


def test_reports_reproduce_from_printed_parameters():
    code, out, _ = call("verify", "SPLIT", "--sweep", "--max-size", "2")
    line = out.splitlines()[5]
    head, _, values = line.partition(": ")
    flag, theorem, *params = head.split()
    code, again, _ = call("verify", theorem, *params)
    assert again.strip() == line and code == 0


def test_complete():
    code, out, _ = call("complete", "--boundary", "par:101,0101,011,0011")
    assert code == 0
    assert out.splitlines()[0] == "triangle tri:0110101,0110011,0011101"


def test_render(tmp_path):
    target = tmp_path / "out.svg"
    code, _, _ = call("render", "--boundary", "tri:1010,0101,0011", "--filling-index", "0", "-o", str(target))
    assert code == 0
    root = ET.parse(target).getroot()
    assert len(list(root.iter("{http://www.w3.org/2000/svg}polygon"))) == 16


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--boundary", "hex:0,0,0"],
        ["count", "--boundary", "tri:0,1,01"],
        ["count", "--boundary", "tri:0,0,0", "--pieces", "H+foo"],
        ["count", "--boundary", "oct:0"],
        ["count"],
        ["frobnicate"],
        ["verify", "NOPE"],
        ["verify", "SPLIT", "alpha=0"],
        ["render", "--boundary", "tri:0,0,0", "--filling-index", "5"],
        ["count", "--boundary", "tri:0,0,0", "--threads", "0"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err.startswith("error")


def test_parse_boundary_forms():
    b = parse_boundary("hex:01,01,01,01,01,01")
    assert b.side_lengths() == (2,) * 6
    b = parse_boundary("par:101,0101,011,0011")
    assert b.sides == ("101", "0101", "", "011", "0011", "")
    b = parse_boundary("tri:00,11,01")
    assert not content_feasible(b)[0]
    assert parse_boundary("pent:0,-,0,-,0").sides[2] == ""
    with pytest.raises(ParseError):
        parse_boundary("tri:0,0")
    with pytest.raises(InfeasibleShape):
        parse_boundary("tri:0,00,0")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schubpuzzle", "count", "--boundary", "tri:01,01,10"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"
