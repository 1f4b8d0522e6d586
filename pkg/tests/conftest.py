import sys
import os
import pytest
from faker import Faker

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from config import Config
from frob import configure_logging
from frob.cli.main import main
from frob.numth import DenominationSet


class TestConfig(Config):
    LOG_LEVEL = 'ERROR'
    LOG_FILE = None


@pytest.fixture(scope='session', autouse=True)
def quiet_logging():
    configure_logging(TestConfig)
    yield


@pytest.fixture(scope='function')
def fake():
    Faker.seed(20240611)
    return Faker()


@pytest.fixture(scope='session')
def pair_3_5():
    return DenominationSet.of(3, 5)


@pytest.fixture(scope='session')
def triples():
    """Three-coin sets with small, known Frobenius numbers."""
    return {
        (2, 3, 7): 1,
        (6, 10, 15): 29,
        (3, 5, 7): 4,
    }


@pytest.fixture(scope='function')
def run_cli(capsys):
    def _run_cli(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run_cli
