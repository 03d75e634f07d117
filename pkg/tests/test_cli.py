import json
import subprocess
import sys

import pytest

from cases import FOUR_RAYS, M_F, QUAD
from tropconv.cli import VERBS, main
from tropconv.curves import FanCurve
from tropconv.serialization import (
    complex_from_json,
    curve_to_json,
    polyhedron_from_json,
    vector_from_json,
)


@pytest.fixture
def run(tmp_path, capsys):
    def go(verb, payload, *flags):
        path = tmp_path / "in.json"
        path.write_text(json.dumps(payload))
        code = main([verb, str(path), *flags])
        out, err = capsys.readouterr()
        return code, out, err

    return go


def test_all_verbs_registered():
    assert set(VERBS) == {
        "hull-points", "hull-segment", "hull-polyhedron", "hull-complex", "hull-ray",
        "classify-halfspace", "check-convex", "trop-det", "trop-rank",
        "curve-degree", "curve-check", "render",
    }


def test_hull_segment(run):
    code, out, _ = run("hull-segment", {"a": [0, 0, 0], "b": [1, 2, 3]})
    assert code == 0
    res = json.loads(out)
    assert res["pseudovertices"] == [["0", "0", "0"], ["1", "1", "1"], ["1", "2", "2"], ["1", "2", "3"]]
    assert res["dim"] == 3 and len(res["simplex_hrep"]) == 4


def test_curve_check(run):
    code, out, _ = run("curve-check", curve_to_json(FanCurve.from_columns(M_F)))
    res = json.loads(out)
    assert code == 0
    assert (res["dim"], res["deg"], res["holds"]) == (2, 3, True)
    code, out, _ = run("curve-check", curve_to_json(FanCurve.from_columns(M_F)), "--chart", "6")
    assert json.loads(out)["dim"] == 2


def test_trop_det_and_rank(run):
    code, out, _ = run("trop-det", [[0, 0], [0, 0]])
    res = json.loads(out)
    assert res == {"value": "0", "unique": False, "singular": True, "argmin": res["argmin"]}
    code, out, _ = run("trop-rank", M_F)
    assert json.loads(out) == {"rank": 3, "dim_tconv_columns": 2}


def test_hull_outputs_are_readable(run):
    code, out, _ = run("hull-points", [[0, 0], [1, 2], [3, 1]])
    cx = complex_from_json({k: v for k, v in json.loads(out).items() if k != "dim"})
    assert len(cx) >= 1
    code, out, _ = run("hull-polyhedron", {"vertices": QUAD})
    res = json.loads(out)
    assert res["dim"] == 2 and len(res["vertices"]) == 6
    polyhedron_from_json({k: v for k, v in res.items() if k != "dim"})
    code, out, _ = run("hull-ray", {"v": [1, 2, 3], "apex": [0, 1, 0]})
    assert json.loads(out)["dim"] == 3
    code, out, _ = run("hull-complex", {"cells": [{"vertices": [[0, 0]], "rays": [[1, 2]]}]}, "--refine")
    assert code == 0 and json.loads(out)["dim"] == 2


def test_classifiers(run):
    code, out, _ = run("classify-halfspace", {"a": [1, -1], "c": "5/2"})
    assert json.loads(out) == {"convex": True, "case": "II", "witness_sector": 1}
    code, out, _ = run("check-convex", {"vertices": [[0, 0, 0], [1, 2, 3], [4, 1, 7]]})
    res = json.loads(out)
    assert res["convex"] is False
    x, y, q = (vector_from_json(v) for v in res["witness_points"])
    tri = polyhedron_from_json({"vertices": [[0, 0, 0], [1, 2, 3], [4, 1, 7]]})
    assert tri.contains(x) and tri.contains(y) and not tri.contains(q)


def test_curve_degree(run):
    rays = [{"v": list(v)} for v in FOUR_RAYS]
    code, out, _ = run("curve-degree", {"ambient": 2, "rays": rays})
    assert json.loads(out) == {"degree": 2}


def test_exit_codes(run, tmp_path):
    code, _, err = run("curve-degree", {"ambient": 3, "rays": [{"v": [0, 1, 1, 1]}]})
    assert code == 2 and json.loads(err)["error"] == "NotBalanced"
    code, _, err = run("hull-points", [[0, 0], [1, 2, 3]])
    assert code == 2 and json.loads(err)["error"] == "DimensionMismatch"
    code, _, err = run("hull-segment", {"a": [0], "b": [1], "extra": 1})
    assert code == 1 and json.loads(err)["error"] == "SchemaError"
    code, _, err = run("classify-halfspace", {"a": [0, 0]})
    assert code == 2 and json.loads(err)["error"] == "ZeroNormal"
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    assert main(["trop-det", str(bad)]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb", "x"])
    assert exc.value.code == 1


def test_output_file_and_determinism(run, tmp_path):
    target = tmp_path / "out.json"
    run("hull-points", [[0, 0, 0], [1, 2, 3], [4, 1, 7]], "-o", str(target))
    first = target.read_bytes()
    run("hull-points", [[0, 0, 0], [1, 2, 3], [4, 1, 7]], "-o", str(target))
    assert target.read_bytes() == first
    _, a, _ = run("trop-rank", M_F, "--seed", "7")
    _, b, _ = run("trop-rank", M_F, "--seed", "7")
    assert a == b


def test_decimals_flag(run):
    _, out, _ = run("hull-segment", {"a": [0, 0], "b": ["1/3", 1]}, "--decimals")
    res = json.loads(out)
    assert {"exact": "1/3", "~": 0.333333} in res["pseudovertices"][1]


def test_render_verb(run, tmp_path):
    overlay = tmp_path / "pts.json"
    overlay.write_text(json.dumps(QUAD))
    code, out, _ = run("render", {"vertices": QUAD}, "--overlay", str(overlay), "--bbox=-1,-1,5,6")
    assert code == 0 and out.startswith("<svg") and "bbox -1 -1 5 6" in out
    code, _, err = run("render", {"vertices": [[0, 0, 0]]})
    assert code == 2 and json.loads(err)["error"] == "NotTwoDimensional"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "tropconv", "trop-det", "-"],
        input="[[0, 1], [1, 0]]", capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout)["unique"] is True
