import json
import subprocess
import sys

import pytest

from hexspan.cli import export_dimacs, run
from hexspan.coloring import (
    WindowColoring,
    exact_window_span,
    single_coset_coloring,
    write_coloring,
)
from hexspan.render import render_svg
from hexspan.rings import ball
from hexspan.solver import ResourceGuard


def test_span_json(capsys):
    assert run(["span", "10", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == "hexspan/1"
    assert payload["span"] == 48 and payload["l"] == 10


def test_span_rejects_odd_l(capsys):
    assert run(["span", "9"]) == 2
    assert "odd" in capsys.readouterr().err


def test_distance_command(capsys):
    assert run(["distance", "0", "0", "-1", "0", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["distance"] == 3 == payload["bfs"]


def test_ring_and_shell_commands(capsys):
    assert run(["ring", "7", "--json"]) == 0
    ring = json.loads(capsys.readouterr().out)
    assert ring["size"] == 21
    assert [0, 7] in ring["corners"]
    assert run(["shell", "7", "1", "--json"]) == 0
    shell = json.loads(capsys.readouterr().out)
    assert shell["size"] == 12
    assert run(["shell", "7", "3"]) == 2  # h = floor(k/2) rejected


def test_check_observations_single_ring_bounds(capsys):
    # p=4 includes a genuine shell-reuse breach, so overall verdict fails
    assert run(["check-observations", "--p", "4", "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    by_id = {}
    for rep in payload["reports"]:
        by_id.setdefault(rep["id"], []).append(rep)
    assert all(r["verdict"] == "pass" for r in by_id["corner-reuse"])
    assert all(r["verdict"] == "pass" for r in by_id["noncorner-reuse"])
    assert all(r["verdict"] == "pass" for r in by_id["corner-pair-exclusion"])
    assert all(r["verdict"] == "pass" for r in by_id["new-color-budget"])
    assert any(r["verdict"] == "fail" for r in by_id["shell-reuse"])


def test_exact_window_command(capsys):
    assert run(["exact-window", "2", "--radius", "1", "--budget", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["feasible"] is True
    assert run(["exact-window", "2", "--radius", "1", "--budget", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["feasible"] is False


def test_exact_window_guard_exit_code(capsys):
    assert run(["exact-window", "4", "--radius", "12", "--budget", "50"]) == 3
    assert "refused" in capsys.readouterr().err


def test_export_dimacs_clique_counts(tmp_path, capsys):
    out = tmp_path / "d2r1.col"
    assert run(["export-dimacs", "2", "--radius", "1", "--out", str(out), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vertices"] == 4 and payload["edges"] == 6
    lines = out.read_text().splitlines()
    assert "p edge 4 6" in lines
    assert sum(1 for ln in lines if ln.startswith("e ")) == 6
    assert any(ln.startswith("c vertex 1 ") for ln in lines)


def test_export_dimacs_l4_r2_complete():
    text = export_dimacs(4, 2)
    header = next(ln for ln in text.splitlines() if ln.startswith("p "))
    assert header == "p edge 10 45"


def test_export_dimacs_l4_r3_edge_count():
    # oracle: count pairs at distance <= 4 directly
    from hexspan.grid import pairwise_distances

    cells = sorted(ball((0, 0), 3))
    dmat = pairwise_distances(cells)
    m = sum(1 for a in range(19) for b in range(a + 1, 19) if dmat[a, b] <= 4)
    text = export_dimacs(4, 3)
    assert f"p edge 19 {m}" in text


def test_export_dimacs_guard():
    with pytest.raises(ResourceGuard):
        export_dimacs(4, 12)


def test_verify_coloring_roundtrip_and_mutation(tmp_path, capsys):
    good = exact_window_span(4, 3, 19).coloring
    good_path = tmp_path / "good.col"
    good_path.write_text(write_coloring(good))
    assert run(["verify-coloring", str(good_path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["valid"] is True

    cells = sorted(good.assignment)
    u, v = cells[0], cells[1]
    bad = dict(good.assignment)
    bad[u] = good.assignment[v]
    bad_path = tmp_path / "bad.col"
    bad_path.write_text(write_coloring(WindowColoring(4, bad)))
    assert run(["verify-coloring", str(bad_path), "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["valid"] is False and payload["violations"]


def test_verify_coloring_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.col"
    path.write_text("hexcolor v1\nl 3\nwindow\ncell 0 0 zero\n")
    assert run(["verify-coloring", str(path)]) == 2
    assert "line 4" in capsys.readouterr().err


def test_verify_coloring_missing_file(capsys):
    assert run(["verify-coloring", "/nonexistent/x.col"]) == 2


def test_search_lattice_command(tmp_path, capsys):
    out = tmp_path / "l8.col"
    assert run(["search-lattice", "8", "--max-index", "40",
                "--out", str(out), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["found"] and payload["colors"] == 38 and payload["verified"]
    assert run(["verify-coloring", str(out)]) == 0


def test_render_window(tmp_path, capsys):
    coloring = exact_window_span(2, 1, 4).coloring
    src = tmp_path / "w.col"
    src.write_text(write_coloring(coloring))
    out = tmp_path / "w.svg"
    assert run(["render", str(src), "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.count("<polygon") == 4
    assert svg.startswith("<?xml")


def test_render_lattice_tiles_domain(tmp_path):
    coloring = single_coset_coloring(2, ((4, 4), (4, -4)))
    src = tmp_path / "lat.col"
    src.write_text(write_coloring(coloring))
    out = tmp_path / "lat.svg"
    assert run(["render", str(src), "--out", str(out), "--tile", "3"]) == 0
    svg = out.read_text()
    assert svg.count("<polygon") == 32 * 9


def test_render_is_deterministic(tmp_path):
    coloring = exact_window_span(2, 1, 4).coloring
    one = render_svg(coloring)
    two = render_svg(coloring)
    assert one == two


def test_render_malformed_exit_2(tmp_path, capsys):
    src = tmp_path / "nope.col"
    src.write_text("not a coloring\n")
    out = tmp_path / "nope.svg"
    assert run(["render", str(src), "--out", str(out)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_usage_error_exit_2():
    assert run(["span"]) == 2
    assert run(["no-such-command"]) == 2


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "hexspan", "span", "8", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["span"] == 33
