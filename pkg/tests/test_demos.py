import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parents[1] / "demos"
FAST = ["01_weights_and_roots.py", "02_spectrum.py", "03_torus_quadrature.py"]


@pytest.mark.parametrize("name", FAST)
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out
