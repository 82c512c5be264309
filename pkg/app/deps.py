"""
Dependency injection utilities
"""
from app.config import Settings, settings
from app.services.character_service import CharacterService
from app.services.identity_service import IdentityService
from app.services.involution_service import InvolutionService
from app.services.multiplicity_service import MultiplicityService
from app.services.orbit_service import OrbitService
from app.services.partition_service import PartitionService
from app.services.tableau_service import TableauService


def get_settings() -> Settings:
    """Get application settings"""
    return settings


def get_partition_service() -> PartitionService:
    return PartitionService(get_settings())


def get_character_service() -> CharacterService:
    return CharacterService(get_settings())


def get_involution_service() -> InvolutionService:
    return InvolutionService(get_settings())


def get_tableau_service() -> TableauService:
    return TableauService(get_settings())


def get_identity_service() -> IdentityService:
    return IdentityService(get_settings())


def get_orbit_service() -> OrbitService:
    return OrbitService(get_settings())


def get_multiplicity_service() -> MultiplicityService:
    return MultiplicityService(get_settings())
