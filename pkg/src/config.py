import os
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).resolve().parent.parent
ENV_FILE = BASE_DIR / "env" / f".env.{os.getenv('ENVIRONMENT', 'dev')}"


class Settings(BaseSettings):
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    SEED: int = 0
    # Re-run the matching verifier on every certificate a search or a
    # theorem transformer hands out.
    VERIFY_EMITTED: bool = True

    BASE_DIR: Path = BASE_DIR

    model_config = SettingsConfigDict(
        env_file=ENV_FILE,
        extra="ignore",
    )


class BudgetSettings(BaseSettings):
    EXPONENT_BUDGET: int = 32
    AUDIT_WORKERS: int = 1

    model_config = SettingsConfigDict(
        env_file=ENV_FILE,
        extra="ignore",
    )


class SamplerSettings(BaseSettings):
    MIN_GENS: int = 1
    MAX_GENS: int = 3
    INT_BOUND: int = 20
    SUPPORT_BOUND: int = 6

    model_config = SettingsConfigDict(
        env_file=ENV_FILE,
        extra="ignore",
    )


settings = Settings()
budget_settings = BudgetSettings()
sampler_settings = SamplerSettings()
