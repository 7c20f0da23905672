import json

import pytest

from discmorse.cli import main

CIRCLE = "0 1\n1 2\n0 2\n"
TRIANGLE = "0 1 2\n"
SPHERE2 = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homology_text_report(tmp_path, capsys):
    path = write(tmp_path, "circle.facets", CIRCLE)
    code, out, err = run(capsys, ["homology", path])
    assert code == 0 and err == ""
    assert out.startswith("command: homology\n")
    assert f"input: {path} sha256 " in out
    assert "cells: 3 3\n" in out
    assert "euler_characteristic: 0\n" in out
    assert "betti: 1 1\n" in out
    assert "  H_0 = Z\n  H_1 = Z\n" in out


def test_homology_json_report(tmp_path, capsys):
    path = write(tmp_path, "circle.facets", CIRCLE)
    code, out, _ = run(capsys, ["homology", "--json", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "homology"
    assert list(doc["inputs"]) == [path]
    assert doc["results"]["betti"] == [1, 1]
    assert doc["warnings"] == []


def test_homology_reports_torsion(tmp_path, capsys):
    rp2 = (
        "0 1 2\n0 1 3\n0 2 4\n0 3 5\n0 4 5\n"
        "1 2 5\n1 3 4\n1 4 5\n2 3 4\n2 3 5\n"
    )
    path = write(tmp_path, "rp2.facets", rp2)
    code, out, _ = run(capsys, ["homology", "--json", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["betti"] == [1, 0, 0]
    assert doc["results"]["torsion_1"] == [2]
    assert "H_1 = Z/2" in doc["results"]["homology"][1]


def test_morse_greedy_default(tmp_path, capsys):
    path = write(tmp_path, "circle.facets", CIRCLE)
    code, out, _ = run(capsys, ["morse", path])
    assert code == 0
    assert "matching_source: greedy\n" in out
    assert "morse: True\n" in out
    assert "critical: 1 1\n" in out
    assert "differential: (none)\n" in out
    assert "homology_match: True\n" in out
    assert "  0 ; 0 1\n  1 ; 1 2\n" in out


def test_morse_with_a_matching_file(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n1 ; 1 2\n")
    code, out, _ = run(capsys, ["morse", cx, "--matching", mt])
    assert code == 0
    assert "matching_valid: True\n" in out
    assert "morse: True\n" in out


def test_morse_reports_closed_vpaths(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n1 ; 1 2\n2 ; 0 2\n")
    code, out, _ = run(capsys, ["morse", cx, "--matching", mt])
    assert code == 0  # a negative verdict is still an answer
    assert "morse: False\n" in out
    assert "closed_vpath: " in out
    assert "critical" not in out


def test_morse_rejects_invalid_matching_files(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n1 ; 0 1\n")
    code, out, _ = run(capsys, ["morse", cx, "--matching", mt])
    assert code == 0
    assert "matching_valid: False\n" in out
    assert "matching_problem: " in out


def test_reduce_steps_and_thom_smale_agreement(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n1 ; 1 2\n")
    code, out, _ = run(capsys, ["reduce", cx, "--matching", mt])
    assert code == 0
    assert "  0 ; 0 1 ; pivot -1\n" in out
    assert "reduced_sizes: 1 1\n" in out
    assert "reduced_differential: (none)\n" in out
    assert "matches_thom_smale: True\n" in out


def test_reduce_respects_order_and_reports_failures(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n1 ; 1 2\n")
    code, out, _ = run(capsys, ["reduce", cx, "--matching", mt, "--order", "1,0"])
    assert code == 0 and "matches_thom_smale: True\n" in out

    bad = write(tmp_path, "cyc.matching", "0 ; 0 1\n1 ; 1 2\n2 ; 0 2\n")
    code, out, _ = run(capsys, ["reduce", cx, "--matching", bad])
    assert code == 0
    assert "morse: False\n" in out
    assert "failed_step: 2\n" in out
    assert "failed_pair: 2 ; 0 2\n" in out
    assert "failed_pivot: 0\n" in out

    code, _, err = run(capsys, ["reduce", cx, "--matching", mt, "--order", "0,0"])
    assert code == 2 and "error:" in err


def test_reduce_all_orders(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n1 ; 1 2\n")
    code, out, _ = run(capsys, ["reduce", cx, "--matching", mt, "--all-orders"])
    assert code == 0
    assert "orders_tested: 2\n" in out
    assert "exhaustive: True\n" in out
    assert "all_orders_agree: True\n" in out
    assert "matches_thom_smale: True\n" in out


def test_euler_finds_a_complete_matching(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    code, out, _ = run(capsys, ["euler", cx])
    assert code == 0
    assert "complete: True\n" in out
    assert "boundary_ok: True\n" in out
    assert "chain:" in out


def test_euler_explains_when_no_matching_exists(tmp_path, capsys):
    cx = write(tmp_path, "sphere2.facets", SPHERE2)
    code, out, _ = run(capsys, ["euler", cx])
    assert code == 0
    assert "complete: False\n" in out
    assert "warning: no complete matching: Euler characteristic is 2" in out


def test_euler_rejects_incomplete_matching_files(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    mt = write(tmp_path, "m.matching", "0 ; 0 1\n")
    code, out, _ = run(capsys, ["euler", cx, "--matching", mt])
    assert code == 0
    assert "complete: False\n" in out
    assert "uncovered_cell: " in out


def test_euler_compare_chains(tmp_path, capsys):
    cx = write(tmp_path, "circle.facets", CIRCLE)
    m1 = write(tmp_path, "m1.matching", "0 ; 0 1\n1 ; 1 2\n2 ; 0 2\n")
    # first produce the chain of m1, then compare m1's run against it
    code, out, _ = run(capsys, ["euler", cx, "--matching", m1])
    assert code == 0
    chain_lines = []
    grab = False
    for line in out.splitlines():
        if line.startswith("chain:"):
            grab = True
            continue
        if grab and line.startswith("  "):
            chain_lines.append(line.strip())
        elif grab:
            break
    chain_file = write(tmp_path, "c1.chain", "\n".join(chain_lines) + "\n")
    code, out, _ = run(capsys, ["euler", cx, "--matching", m1, "--compare", chain_file])
    assert code == 0
    assert "comparable: True\n" in out
    assert "homologous: True\n" in out

    # the other complete matching yields a chain that is not homologous
    m2 = write(tmp_path, "m2.matching", "0 ; 0 2\n1 ; 0 1\n2 ; 1 2\n")
    code, out, _ = run(capsys, ["euler", cx, "--matching", m2, "--compare", chain_file])
    assert code == 0
    assert "comparable: True\n" in out
    assert "homologous: False\n" in out

    stray = write(tmp_path, "stray.chain", "0 ; 0 1\n")
    code, out, _ = run(capsys, ["euler", cx, "--matching", m1, "--compare", stray])
    assert code == 0
    assert "comparable: False\n" in out
    assert "warning: chains have different boundaries" in out


def test_subdivide_report(tmp_path, capsys):
    cx = write(tmp_path, "triangle.facets", TRIANGLE)
    code, out, _ = run(capsys, ["subdivide", cx])
    assert code == 0
    assert "subdivision_cells: 7 12 6\n" in out
    assert "euler_preserved: True\n" in out
    assert "  0 1 2 ; 6\n" in out  # the triangle's barycenter gets the last id
    assert "facets:" in out


def test_product_report_and_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, ["product", "1", "1"])
    assert code == 0
    assert "cells: 4 5 2\n" in out
    assert "euler_characteristic: 1\n" in out
    facet_lines = [
        line.strip()
        for line in out.splitlines()
        if line.startswith("  ") and not line.startswith("   ")
    ]
    assert "0 1 3" in facet_lines and "0 2 3" in facet_lines


def test_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(capsys, ["homology", str(tmp_path / "nope.facets")])
    assert code == 2
    assert err.startswith("error: cannot read")


def test_malformed_facets_exit_2(tmp_path, capsys):
    path = write(tmp_path, "bad.facets", "0 0 1\n")
    code, _, err = run(capsys, ["homology", path])
    assert code == 2
    assert "error:" in err and "line 1" in err
