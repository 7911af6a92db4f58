import json
from functools import lru_cache

import pytest

from heawood_kit.artifacts import (
    DomainSpec,
    UnsupportedDimension,
    coord_label,
    domain_vectors,
    export_complex_off,
    export_graph,
    export_graph_dot,
    export_graph_json,
    fundamental_tile_scene,
    import_graph_json,
    parse_matrix_arg,
    render_svg,
)
from heawood_kit.cli import cli
from heawood_kit.fixtures import klein_quartic
from heawood_kit.lattice import KSignature
from heawood_kit.quotient import build_heawood_graph, build_torus_complex


@lru_cache(maxsize=None)
def graph(entries):
    return build_heawood_graph(KSignature(entries))


def test_coord_label():
    assert coord_label((1, 2, 3)) == "1,2,3"
    assert coord_label((-1, 4, 3)) == "-1,4,3"


def test_dot_export_structure():
    text = export_graph_dot(graph((1, 1, 1)))
    lines = text.splitlines()
    assert lines[0] == "graph quotient {"
    assert lines[-1] == "}"
    assert sum(1 for ln in lines if "[label=" in ln) == 14
    assert sum(1 for ln in lines if " -- " in ln) == 21


def test_json_round_trip():
    g = graph((2, 1, 2))
    text = export_graph_json(g)
    payload = json.loads(text)
    assert payload["schema"] == "heawood-kit/1"
    assert payload["signature"] == [2, 1, 2]
    h = import_graph_json(text)
    assert h.vertex_count == g.vertex_count
    assert h.adjacency == g.adjacency
    assert h.labels == g.labels


def test_exports_are_byte_stable():
    g = graph((1, 1, 1))
    assert export_graph(g, "dot") == export_graph(g, "dot")
    assert export_graph(g, "json") == export_graph(g, "json")
    c = build_torus_complex(KSignature((1, 1, 1)))
    assert export_complex_off(c) == export_complex_off(c)
    scene = fundamental_tile_scene(KSignature((2, 1, 2)), domain="parallelepiped")
    assert render_svg(scene) == render_svg(scene)
    with pytest.raises(ValueError):
        export_graph(g, "csv")


def test_off_counts():
    c = build_torus_complex(KSignature((1, 1, 1)))
    lines = export_complex_off(c).splitlines()
    assert lines[0] == "OFF"
    assert lines[1] == "7 14 21"
    assert len(lines) == 2 + 7 + 14

    kq = export_complex_off(klein_quartic()).splitlines()
    assert kq[1] == "24 56 84"


def test_svg_hexagon_count_is_quotient_order():
    for entries in [(1, 1, 1), (2, 1, 2), (1, 3, 2)]:
        k = KSignature(entries)
        scene = fundamental_tile_scene(k)
        assert len(scene.hexagons) == k.order()
        svg = render_svg(scene)
        assert svg.count("<polygon") == k.order()
    scene = fundamental_tile_scene(KSignature((1, 1, 1)), domain="permutahedron")
    svg = render_svg(scene)
    assert svg.count("<polygon") == 7 + 1  # tiles plus the domain outline
    with pytest.raises(UnsupportedDimension):
        fundamental_tile_scene(KSignature((1, 1, 1, 1)))


def test_domain_vectors():
    spec = domain_vectors(KSignature((1, 1, 1)))
    assert isinstance(spec, DomainSpec)
    assert spec.vectors == ((2, -1, 0), (0, 2, -1), (-1, 0, 2))


def test_parse_matrix_arg():
    m = parse_matrix_arg("2,0,-1;0,2,-1;-1,-1,3")
    assert m.row_list() == [(2, 0, -1), (0, 2, -1), (-1, -1, 3)]


def run_cli(capsys, *argv):
    code = cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_build_summary(capsys):
    code, out, _ = run_cli(capsys, "build", "-k", "1,1,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "heawood-kit/1"
    assert payload["graph"] == {"vertices": 14, "edges": 21, "d": 2}


def test_cli_build_formats(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "build", "-k", "1,1,1", "--format", "dot")
    assert code == 0 and out.startswith("graph quotient {")
    code, out, _ = run_cli(capsys, "build", "-k", "1,1,1", "--torus",
                           "--format", "off")
    assert code == 0 and out.startswith("OFF\n7 14 21")
    target = tmp_path / "g.json"
    code, out, _ = run_cli(capsys, "build", "-k", "1,1,1",
                           "--format", "json-graph", "-o", str(target))
    assert code == 0 and out == ""
    assert import_graph_json(target.read_text()).vertex_count == 14


def test_cli_build_torus_summary(capsys):
    code, out, _ = run_cli(capsys, "build", "-k", "1,1,1", "--torus")
    payload = json.loads(out)
    assert code == 0
    assert payload["torus"]["fvector"] == [7, 21, 14]
    assert payload["torus"]["euler_characteristic"] == 0


def test_cli_fvector_both(capsys):
    code, out, _ = run_cli(capsys, "fvector", "-k", "2,1,2")
    payload = json.loads(out)
    assert code == 0
    assert payload["formula"] == payload["enumerated"]
    assert payload["match"] is True


def test_cli_aut_compare(capsys):
    code, out, _ = run_cli(capsys, "aut", "-k", "1,1,1")
    payload = json.loads(out)
    assert code == 0
    assert payload["generated"] == 42
    assert payload["brute"] == 336
    assert payload["exceptional"] is True

    code, out, _ = run_cli(capsys, "aut", "-k", "2,2,2")
    payload = json.loads(out)
    assert payload["exceptional"] is False


def test_cli_analyze(capsys):
    code, out, _ = run_cli(capsys, "analyze", "-k", "1,3,2",
                           "--hamiltonian", "1")
    payload = json.loads(out)
    assert code == 0
    assert payload["outcome"] == "premature-closure"
    assert payload["length"] == 12
    assert payload["vertices"] == 36

    code, out, _ = run_cli(capsys, "analyze", "-k", "1,1,2",
                           "--bipartite", "--six-cycles", "--chromatic")
    payload = json.loads(out)
    assert code == 0
    assert payload["bipartite"] is True
    assert payload["six_cycle_count"] == 6
    assert payload["chromatic_number"] == 2


def test_cli_census(capsys):
    code, out, _ = run_cli(capsys, "census", "--matrix",
                           "2,0,-1;0,2,-1;-1,-1,3")
    payload = json.loads(out)
    assert code == 0
    assert payload["quotient_order"] == 8
    assert payload["vertices"] == 16
    assert payload["all_ones_in_span"] is True

    code, out, _ = run_cli(capsys, "census", "--matrix",
                           "1,-1,0;0,1,-1;3,0,-3")
    payload = json.loads(out)
    assert code == 0
    assert payload["vertices"] == 6
    assert payload["all_ones_in_span"] is False


def test_cli_render(capsys):
    code, out, _ = run_cli(capsys, "render", "-k", "1,1,1",
                           "--domain", "parallelepiped")
    assert code == 0
    assert out.startswith("<svg") and out.rstrip().endswith("</svg>")


def test_cli_fixture(capsys):
    code, out, _ = run_cli(capsys, "fixture", "klein-quartic")
    payload = json.loads(out)
    assert code == 0
    assert payload["vertices"] == 24
    assert payload["facets"] == 56
    assert payload["edges"] == 84
    assert payload["euler_characteristic"] == -4


def test_cli_validation_exit_code(capsys):
    code, _, err = run_cli(capsys, "build", "-k", "1,-1,1")
    assert code == 2
    code, _, err = run_cli(capsys, "census", "--matrix", "1,-1,0;0,0,0;0,0,0")
    assert code == 2
    code, _, _ = run_cli(capsys, "fixture", "unknown-name")
    assert code == 2


def test_cli_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("HEAWOOD_CAP", "5")
    code, _, err = run_cli(capsys, "aut", "-k", "2,2,2", "--brute")
    assert code == 3
    assert "refused" in err
