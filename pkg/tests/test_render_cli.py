import io
import json
from pathlib import Path
import xml.etree.ElementTree as ET

from hypothesis import given
import pytest

from apollonian_kingdom.circles import Circle, circle_from_matrix
from apollonian_kingdom.cli import main
from apollonian_kingdom.explorer import Window
from apollonian_kingdom.gaussian import GaussInt
from apollonian_kingdom.minkowski import BASE_QUADRUPLE
from apollonian_kingdom.render import (
    NEGATIVE_STROKE,
    Labels,
    RenderSpec,
    circle_from_json,
    circle_to_json,
    emit_svg,
    read_jsonl,
    write_jsonl,
)

from conftest import unit_det_matrices

GOLDEN = Path(__file__).parent / "golden"
SVG_NS = "{http://www.w3.org/2000/svg}"
BASE = [Circle.from_pedoe(v) for v in BASE_QUADRUPLE]
SPEC = RenderSpec(Window.of(-1, -1 / 2, 3, 3 / 2), scale=100, labels=Labels.CURVATURE)


@given(unit_det_matrices)
def test_json_round_trip(m):
    c = circle_from_matrix(m)
    assert circle_from_json(circle_to_json(c)) == c
    buf = io.StringIO()
    write_jsonl([c, c], buf)
    assert read_jsonl(io.StringIO(buf.getvalue())) == [c, c]


def test_json_schema():
    assert json.loads(circle_to_json(BASE[2])) == {"b": 2, "bp": 2, "zre": 2, "zim": 1}
    with pytest.raises(ValueError):
        circle_from_json('{"b": 2.0, "bp": 2, "zre": 2, "zim": 1}')
    with pytest.raises(ValueError):
        circle_from_json('{"b": 2, "bp": 2, "zre": 2, "zim": 2}')


def elements(svg: str, tag: str):
    return ET.fromstring(svg).iter(SVG_NS + tag)


def test_empty_svg_is_valid():
    svg = emit_svg([], SPEC)
    root = ET.fromstring(svg)
    assert root.tag == SVG_NS + "svg"
    assert not list(elements(svg, "circle")) and not list(elements(svg, "line"))


def test_base_quadruple_svg():
    svg = emit_svg(BASE, SPEC)
    assert len(list(elements(svg, "circle"))) == 2
    assert len(list(elements(svg, "line"))) == 2
    assert emit_svg(BASE, SPEC) == svg
    assert svg == (GOLDEN / "base_quadruple.svg").read_text()


def test_negative_circles_get_their_own_stroke():
    svg = emit_svg([Circle(-2, 0, GaussInt(0, -1))], SPEC)
    (c,) = elements(svg, "circle")
    assert c.get("stroke") == NEGATIVE_STROKE
    assert c.get("r") == "50.000000"


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(Window.of(0, 0, 1, 1), scale=0)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_strip(capsys, tmp_path):
    out, svg = tmp_path / "strip.jsonl", tmp_path / "strip.svg"
    code, _ = run(capsys, "strip", "--max-curvature", "2", "--out", str(out), "--svg", str(svg))
    assert code == 0
    circles = read_jsonl(out.open())
    assert sum(c.b == 0 for c in circles) == 2 and {c.b for c in circles} == {0, 2}
    ET.fromstring(svg.read_text())


def test_cli_output_is_deterministic(capsys):
    first = run(capsys, "palace", "--max-curvature", "12", "--labels", "half")[1].out
    second = run(capsys, "palace", "--max-curvature", "12", "--labels", "half")[1].out
    assert first == second and first


def test_cli_coset_and_superpacking(capsys):
    code, res = run(capsys, "coset", "--coset-matrix", "i,0,1,i", "--max-curvature", "6")
    assert code == 0
    assert [json.loads(l)["b"] for l in res.out.splitlines()] == [-2, 4, 4, 6, 6]
    code, res = run(capsys, "superpacking", "--max-curvature", "10", "--window", "-1/2,-1/2,1/2,1/2", "--center", "1/2,1/2")
    assert code == 0 and len(res.out.splitlines()) == 72


def test_cli_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# figure settings\nmax-curvature = 10\nwindow = -2,-1/2,2,3/2\n")
    from_config = run(capsys, "strip", "--config", str(cfg))[1].out.splitlines()
    from_flag = run(capsys, "strip", "--config", str(cfg), "--max-curvature", "2")[1].out.splitlines()
    default = run(capsys, "strip")[1].out.splitlines()
    assert len(from_flag) < len(from_config) < len(default)


@pytest.mark.parametrize(
    "argv",
    [
        ["strip", "--max-curvature", "0"],
        ["strip", "--window", "1,0,0,1"],
        ["coset", "--coset-matrix", "2,0,0,1"],
        ["palace", "--seed", "1,2,3"],
        ["verify", "nonsense"],
        ["verify", "lockstep", "--depth", "9"],
        ["strip", "--labels", "loud"],
    ],
)
def test_cli_bad_flags_exit_nonzero(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0
    assert capsys.readouterr().err


def test_cli_bad_config(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = red\n")
    with pytest.raises(SystemExit):
        main(["strip", "--config", str(cfg)])


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "lockstep", "--depth", "4"],
        ["verify", "spinor", "--samples", "50", "--seed", "1"],
        ["verify", "descartes", "--from", "strip", "--max-curvature", "50"],
        ["verify", "primitivity", "--from", "coset", "--max-curvature", "20"],
        ["verify", "hermitian", "--samples", "20"],
    ],
)
def test_cli_verify(capsys, argv):
    code, res = run(capsys, *argv)
    assert code == 0
    assert "PASS" in res.out
