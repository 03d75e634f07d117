import runpy
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("[0-9]*.py"))


@pytest.mark.parametrize("path", DEMOS, ids=lambda p: p.stem)
def test_demo_runs(path, tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", [str(path), str(tmp_path)])
    runpy.run_path(str(path), run_name="__main__")
    assert capsys.readouterr().out


def test_demo_inputs_drive_the_cli(capsys):
    from tropconv.cli import main

    inputs = Path(__file__).parent.parent / "demos" / "inputs"
    for verb, name in [
        ("hull-segment", "segment.json"),
        ("hull-polyhedron", "quad.json"),
        ("check-convex", "triangle3d.json"),
        ("hull-points", "points.json"),
        ("classify-halfspace", "halfspace.json"),
        ("trop-rank", "mf.json"),
        ("curve-check", "gamma_f.json"),
        ("render", "quad.json"),
    ]:
        assert main([verb, str(inputs / name)]) == 0, verb
    capsys.readouterr()
