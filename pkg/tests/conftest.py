"""
Test configuration and fixtures
"""
import pytest
from fastapi.testclient import TestClient

from app.config import Settings
from app.main import app
from app.models import Twist
from app.services.character_service import CharacterService
from app.services.identity_service import IdentityService
from app.services.involution_service import InvolutionService
from app.services.multiplicity_service import MultiplicityService
from app.services.orbit_service import OrbitService, abstract_table
from app.services.partition_service import PartitionService
from app.services.tableau_service import TableauService


@pytest.fixture(scope="session")
def test_settings():
    """Settings with the default bounds, independent of any .env file"""
    return Settings(_env_file=None)


@pytest.fixture
def partition_service(test_settings):
    return PartitionService(test_settings)


@pytest.fixture
def character_service(test_settings):
    return CharacterService(test_settings)


@pytest.fixture
def involution_service(test_settings):
    return InvolutionService(test_settings)


@pytest.fixture
def tableau_service(test_settings):
    return TableauService(test_settings)


@pytest.fixture
def identity_service(test_settings):
    return IdentityService(test_settings)


@pytest.fixture
def orbit_service(test_settings):
    return OrbitService(test_settings)


@pytest.fixture
def multiplicity_service(test_settings):
    return MultiplicityService(test_settings)


@pytest.fixture
def client():
    """Create test client"""
    yield TestClient(app)


def _sample_specs():
    return [
        {"id": "one", "tag": "one"},
        {"id": "minus-one", "tag": "minus-one", "d": -1},
        {"id": "sd", "tag": "self-dual", "m": 2, "d": 1},
        {"id": "a", "tag": "dual-pair", "m": 1, "d": 1, "partner": "b"},
        {"id": "b", "tag": "dual-pair", "m": 1, "d": 1, "partner": "a"},
    ]


@pytest.fixture
def split_table():
    """Declared table with one orbit of every kind"""
    return abstract_table(Twist.SPLIT, _sample_specs())


@pytest.fixture
def nonsplit_table():
    return abstract_table(Twist.NONSPLIT, _sample_specs())
