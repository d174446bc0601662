import json
from math import pi
from pathlib import Path

import numpy as np
import pytest

from config.settings import Tolerances
from model.diskModel import DiskProfile
from services.diskMetricServices import synthesize_standard_disk


@pytest.fixture(scope="session")
def standard_disk() -> DiskProfile:
    return synthesize_standard_disk(grid=2048, target_boundary_length=1.0)


@pytest.fixture
def hemisphere():
    def build(intervals: int = 2048) -> DiskProfile:
        rho = np.linspace(0.0, 0.25, intervals + 1)
        return DiskProfile(rho=rho, h=np.sin(2 * pi * rho) / (2 * pi))

    return build


@pytest.fixture
def loose_gauss_bonnet() -> Tolerances:
    # second-order pole differences of closed-form profiles
    return Tolerances(gauss_bonnet=1e-5)


@pytest.fixture
def write_json_file(tmp_path):
    def write(name: str, payload) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def square_lens_description():
    return {
        "type": "two_sided",
        "gram": {"g11": "1", "g12": "0", "g22": "1"},
        "f1": [1, 0],
        "f2": [1, 2],
    }


@pytest.fixture
def prism_description():
    return {"type": "one_sided", "r1": "1", "r2": "1", "f": [3, 2]}


GOLDEN_DIR = Path(__file__).parent / "golden"
# golden placeholders for grid-dependent reals and machine-dependent paths
ANY_REAL = "<real>"
ANY_PATH = "<path>"


def _is_decimal(text: str) -> bool:
    if "/" in text:
        return False
    try:
        float(text)
    except ValueError:
        return False
    return True


def _match(actual, expected, where: str, rel: float, abs_tol: float) -> None:
    if expected == ANY_REAL:
        assert isinstance(actual, str) and _is_decimal(actual), f"{where}: expected a real, got {actual!r}"
    elif expected == ANY_PATH:
        assert isinstance(actual, str) and actual, f"{where}: expected a path, got {actual!r}"
    elif isinstance(expected, dict):
        assert isinstance(actual, dict), f"{where}: expected an object, got {actual!r}"
        assert sorted(actual) == sorted(expected), f"{where}: keys {sorted(actual)} != {sorted(expected)}"
        for key, value in expected.items():
            _match(actual[key], value, f"{where}.{key}", rel, abs_tol)
    elif isinstance(expected, list):
        assert isinstance(actual, list) and len(actual) == len(expected), f"{where}: {actual!r} != {expected!r}"
        for index, (got, want) in enumerate(zip(actual, expected)):
            _match(got, want, f"{where}[{index}]", rel, abs_tol)
    elif isinstance(expected, str) and _is_decimal(expected):
        assert isinstance(actual, str), f"{where}: expected a decimal string, got {actual!r}"
        assert float(actual) == pytest.approx(float(expected), rel=rel, abs=abs_tol), where
    else:
        assert actual == expected, f"{where}: {actual!r} != {expected!r}"


@pytest.fixture
def golden():
    """Compare a parsed report with tests/golden/<name>; rationals and integers must match exactly"""
    def check(name: str, actual, rel: float = 1e-9, abs_tol: float = 1e-12) -> None:
        expected = json.loads((GOLDEN_DIR / name).read_text(encoding="utf-8"))
        _match(actual, expected, name, rel, abs_tol)

    return check
