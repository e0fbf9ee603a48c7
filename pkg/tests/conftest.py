from pathlib import Path

import pytest

from tamecodes.io import load_json, parse_rep

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def worked_rho1():
    return parse_rep(load_json(FIXTURES / "worked_rho1.json"))


@pytest.fixture
def worked_rho0():
    return parse_rep(load_json(FIXTURES / "worked_rho0.json"))
