import json

import pytest

from basiccovers import graph
from basiccovers.cli import EXIT_ANALYSIS, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from basiccovers.hypergraph import format_hypergraph, random_antichain


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_covers_edge(capsys):
    code, out, _ = run(capsys, "covers", "path:2", "-k", "1")
    assert code == EXIT_OK
    assert json.loads(out)["covers"] == [[0, 1], [1, 0]]


def test_covers_count_text(capsys):
    code, out, _ = run(capsys, "covers", "cycle:6", "-k", "2", "--count", "--format", "text")
    assert code == EXIT_OK and out.strip() == "12"


def test_gdim_c10(capsys):
    code, out, _ = run(capsys, "gdim", "cycle:10")
    d = json.loads(out)
    assert code == EXIT_OK and d["gdim"] == 5 and d["drawing"]["r"] == 4


def test_gdim_render(capsys):
    code, out, _ = run(capsys, "gdim", "cycle:6", "--render", "--format", "text")
    assert code == EXIT_OK and out.startswith("gdim = 3")


def test_analyze_hexagon(capsys):
    code, out, _ = run(capsys, "analyze", "cycle:6", "--kmax", "8")
    d = json.loads(out)
    assert code == EXIT_OK
    assert (d["wsc"], d["dim_estimate"], d["multiplicity_estimate"]) == (False, 3, 3)


def test_hilbert_unstable_is_reported(capsys):
    code, out, _ = run(capsys, "hilbert", "cycle:10", "--kmax", "3", "--format", "text")
    assert code == EXIT_OK and "not stable" in out


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "whisker:3")
    d = json.loads(out)
    assert code == EXIT_OK and d["rank"] == 4 and d["maximal_chain_count"] == "2"


def test_analysis_error_exit_code(capsys):
    code, _, err = run(capsys, "lattice", "cycle:6")
    assert code == EXIT_ANALYSIS and "NotUnmixed" in err


def test_usage_errors(capsys):
    assert run(capsys, "hilbert", "no-such-thing")[0] == EXIT_USAGE
    assert run(capsys, "gdim", "moebius:3")[0] == EXIT_USAGE
    assert run(capsys, "hypergraph", "simplex:x")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["covers", "cycle:6", "-k", "0"])
    assert info.value.code == EXIT_USAGE


def test_file_sources(tmp_path, capsys):
    g = tmp_path / "g.txt"
    assert main(["gen", "cycle:8", "-o", str(g)]) == EXIT_OK
    assert graph.read_graph(str(g)) == graph.cycle(8)
    code, out, _ = run(capsys, "covers", str(g), "--count")
    assert code == EXIT_OK and json.loads(out)["count"] == 10

    h = tmp_path / "h.txt"
    h.write_text(format_hypergraph(random_antichain(4, 2, 2, seed=3)))
    code, out, _ = run(capsys, "hypergraph", str(h), "--kmax", "6")
    assert code == EXIT_OK and "stable" in json.loads(out)

    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\ne 1\n")
    assert run(capsys, "covers", str(bad))[0] == EXIT_USAGE


def test_hypergraph_simplex(capsys):
    code, out, _ = run(capsys, "hypergraph", "simplex:3")
    d = json.loads(out)
    assert code == EXIT_OK and d["degree"] == 2 and d["within_bounds"]


@pytest.mark.parametrize("argv", [["covers", "cycle:8", "-k", "3"], ["hilbert", "cycle:8", "--kmax", "6"]])
def test_workers_byte_identical(capsys, argv):
    outs = [run(capsys, *argv, "--workers", str(w))[1] for w in (1, 2, 3)]
    assert outs[0] == outs[1] == outs[2]


def test_seeded_generators_reproducible(capsys):
    a = run(capsys, "gen", "random:3,4,0.5", "--seed", "5")[1]
    b = run(capsys, "gen", "random:3,4,0.5", "--seed", "5")[1]
    assert a == b and a.startswith("n ")


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--only", "1")[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", "--only", "14")
    assert code == EXIT_VERIFY and "[FAIL] 14" in out
