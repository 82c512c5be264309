from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Enumeration bounds
    partition_bound: int = 40
    character_bound: int = 40
    oracle_bound: int = 8
    involution_bound: int = 14
    brute_force_bound: int = 8
    tableau_bound: int = 40

    # Identity sweeps
    identity_plain_bound: int = 8
    identity_signed_bound: int = 7

    # Multiplicity engine
    multiplicity_bound: int = 8
    max_support: int = 3

    # Orbit model
    max_q: int = 97
    max_level: int = 6
    orbit_element_bound: int = 200_000

    # App
    log_level: str = "INFO"
    schema_version: str = "1.0"

    class Config:
        env_file = ".env"


settings = Settings()
