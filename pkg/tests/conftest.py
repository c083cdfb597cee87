import os
from fractions import Fraction
from pathlib import Path

os.environ.setdefault('APP_ENV', 'testing')

import pytest  # noqa: E402

from config import TestingConfig  # noqa: E402
from models.models import OneForm  # noqa: E402
from models.parser import parse_poly  # noqa: E402
from services.local_algebra_service import LocalAlgebraService  # noqa: E402
from services.saito_service import SaitoService  # noqa: E402
from services.topology_service import TopologyService  # noqa: E402

FIXTURES = Path(__file__).parent / 'fixtures'


def form(a: str, b: str) -> OneForm:
    return OneForm(A=parse_poly(a), B=parse_poly(b))


def quasi_homogeneous_case(p: int, q: int):
    """y^p - x^q with the basis q*y dx - p*x dy and df"""
    f = parse_poly(f"y^{p} - x^{q}")
    w1 = form(f"{q}*y", f"-{p}*x")
    w2 = form(f"-{q}*x^{q - 1}", f"{p}*y^{p - 1}")
    return f, w1, w2


ONE_STAGE = (
    parse_poly("y^5 - x^6 + x^4*y^3"),
    form("-6*x*y + 16/15*x^3*y^2 - 8/5*x*y^5", "5*x^2 + 4/3*y^3 + 4/5*x^2*y^4"),
    form("-6*y^2 + 8/5*x^4 - 12/5*x^2*y^3", "5*x*y + 6/5*x^3*y^2"),
)

TWO_STAGE = (
    parse_poly("y^5 - x^11 + x^6*y^3"),
    form("605*y^2 + 198*x*y^3 - 88*x^6", "-275*x*y - 66*x^2*y^2"),
    form("605*x^4*y + 150*x^5*y^2", "-40*y^3 - 275*x^5 - 90*x^6*y"),
)

SEVEN_EIGHT = (
    parse_poly("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4"),
    form("8*x^2*y - 147/8*x^4 - 3087/4*x^2*y^2 - 21609/16*y^4",
         "-7*x^3 + 7/4*x*y^2 + 64827/64*x*y^3 + 5145/8*x^3*y"),
    form("8*x*y^2 + 1029/8*x^3*y", "-7*x^2*y + 7/4*y^3 - 1029/8*x^4"),
)

# name -> (curve, basis, unit, mu, tau, (i1, i2))
SAITO_CASES = {
    'cusp': (quasi_homogeneous_case(2, 3), Fraction(6), 2, 2, (1, 2)),
    'quasi_homogeneous_5_6': (quasi_homogeneous_case(5, 6), Fraction(30), 20, 20, (1, 5)),
    'one_stage': (ONE_STAGE, Fraction(8), 20, 19, (1, 2)),
    'two_stage': (TWO_STAGE, None, 40, 36, (2, 4)),
    'seven_eight': (SEVEN_EIGHT, Fraction(-151263, 64), 42, 37, (1, 2)),
}


@pytest.fixture
def config():
    return TestingConfig


@pytest.fixture
def local_algebra(config):
    return LocalAlgebraService(config=config)


@pytest.fixture
def saito(local_algebra, config):
    return SaitoService(local_algebra=local_algebra, config=config)


@pytest.fixture
def topology():
    return TopologyService()


@pytest.fixture
def fixture_path():
    def resolve(name: str) -> str:
        return str(FIXTURES / name)
    return resolve
