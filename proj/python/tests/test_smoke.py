import os
import subprocess
import xml.etree.ElementTree as ET

import pytest

import nonloose as nl


def test_slopes():
    assert str(nl.farey_sum("1/2", "1/3")) == "2/5"
    assert nl.dot("1/2", "1/3") == 1
    assert nl.has_edge(0, nl.Slope.infinity())
    assert not nl.has_edge(0, 2)
    assert nl.Slope.parse("-4/2") == nl.Slope(-2)
    assert {nl.Slope(1, 2), nl.Slope.parse("1/2")} == {nl.Slope(1, 2)}
    with pytest.raises(ValueError):
        nl.farey_sum(0, 2)


def test_continued_fractions():
    assert nl.expand("-5/2") == [-3, -2]
    assert str(nl.value([-3, -2])) == "-5/2"
    assert str(nl.successor("-8/3")) == "-5/2"
    assert nl.ancestor(-5).is_infinite()
    assert [str(s) for s in nl.minimal_path("-5/2", -1)] == ["-5/2", "-2/1", "-1/1"]
    assert nl.block_structure(["-8/3", "-5/2", -2, -1]) == [[0, 1], [2]]


def test_tight_counts():
    assert nl.count_tight("lens", 5, 2) == 2
    assert nl.count_tight("torus", -4, -1) == 4
    assert nl.count_tight("upper", 0, -3) == 3
    with pytest.raises(ValueError):
        nl.count_tight("klein", 0, 1)


def test_classify_lp1():
    for p in range(2, 8):
        c = nl.classify(p, 1)
        assert c["lens"] == {"p": p, "q": 1}
        kinds = [r["kind"] for r in c["ranges"]]
        assert kinds == ["V"] * p
        assert c["ranges"][0]["base"] == ["0", f"1/{p}"]


def test_classify_matches_range_counts():
    for p, q in [(5, 2), (7, 3), (11, 4), (13, 5)]:
        for knot in ["K0", "K1"]:
            c = nl.classify(p, q, knot)
            n = nl.range_counts(p, q, knot)
            kinds = [r["kind"] for r in c["ranges"]]
            assert kinds.count("BackSlash") == n["slashes"]
            assert kinds.count("ForwardSlash") == n["slashes"]
            assert kinds.count("V") == n["v_low"] + n["v_high"]
            assert len(kinds) == n["total"]


def test_domain_errors():
    with pytest.raises(ValueError):
        nl.classify(4, 2)
    with pytest.raises(ValueError):
        nl.classify(5, 2, kmax=2)


def test_svg_parses():
    svg = nl.classify_svg(5, 2, kmax=4)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    ns = {"s": "http://www.w3.org/2000/svg"}
    members = sum(len(r["members"]) for r in nl.classify(5, 2, kmax=4)["ranges"])
    circles = [c for c in root.iter("{http://www.w3.org/2000/svg}circle") if c.get("class") == "member"]
    assert len(circles) == members
    assert root.findall(".//s:g[@class='range']", ns)


def test_cables():
    assert nl.divide_cable_tb(5, 2) == 10
    assert nl.ruling_cable_tb(2, 3, 0) == 3
    assert nl.positive_cable(1, 0, 2, 5) == (7, 0)
    assert nl.self_linking(10, 3) == 7
    assert nl.transnonsimple_family(2) == {"tb": 10, "rot": 3, "sl": 7, "count": 2}


def test_existence():
    s3 = dict(rational_unknot=True, unknot=True, unknot_in_s3=True, in_ball=True)
    assert nl.admits_nonloose("legendrian", "S3", **s3) == "exactly-one"
    assert nl.admits_nonloose("transverse", "S3", **s3) == "none"
    assert nl.admits_nonloose("transverse", "lens", rational_unknot=True) == "none"
    with pytest.raises(ValueError):
        nl.admits_nonloose()


def test_run_cli_in_process():
    status, out, err = nl.run_cli(["tight-count", "lens", "5", "2"])
    assert (status, out, err) == (0, "2\n", "")
    status, _, err = nl.run_cli(["classify", "five", "2"])
    assert status == 2 and "five" in err


@pytest.mark.skipif("NONLOOSE_CLI" not in os.environ, reason="NONLOOSE_CLI not set")
def test_cli_binary_agrees():
    args = ["classify", "7", "3", "--format", "csv"]
    proc = subprocess.run([os.environ["NONLOOSE_CLI"], *args], capture_output=True, text=True, check=True)
    assert proc.stdout == nl.run_cli(args)[1]
