"""Configuration module for the signed difference set toolkit using Pydantic Settings."""

import os
from enum import Enum
from typing import ClassVar

from dotenv_vault import load_dotenv  # type: ignore[import-untyped]
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file or .env.vault (if DOTENV_KEY is set)
_ = load_dotenv()


class Environment(str, Enum):
    """Runtime environments."""

    DEVELOPMENT = "development"
    PRODUCTION = "production"


class OutputFormat(str, Enum):
    """Output formats understood by the command-line interface."""

    TEXT = "text"
    RECORDS = "records"
    JSON = "json"


class Family(str, Enum):
    """Construction families of the construct command."""

    PALEY = "paley"
    GOLAY = "golay"
    PRODUCT3 = "product3"
    CYCLOTOMIC = "cyclotomic"


class Settings(BaseSettings):
    """Application settings loaded from SDS_* environment variables and .env file."""

    model_config: ClassVar[SettingsConfigDict] = SettingsConfigDict(
        env_prefix="SDS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Runtime
    environment: Environment = Field(Environment.DEVELOPMENT, description="Environment: development or production")
    log_level: str | None = Field(None, description="Explicit log level; overrides the environment default")
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1, description="Worker threads for scans")
    seed: int = Field(20240917, description="Default seed for randomized checks")

    # Monitoring (Optional)
    sentry_dsn: str | None = Field(None, description="Sentry DSN for error tracking")

    # Arithmetic limits
    max_field_order: int = Field(10**6, ge=2, description="Largest finite field order accepted by field_make")

    # Weighing matrix export
    full_matrix_max_order: int = Field(512, ge=1, description="Largest order for which W is materialized")
    weighing_sample_pairs: int = Field(200, ge=1, description="Row pairs checked when W is not materialized")

    # Product construction
    product3_max_m: int = Field(4, ge=2, description="Largest m accepted by the 3-group product construction")
    product3_convolution_max_m: int = Field(2, ge=2, description="Largest m verified by full convolution")

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str | None) -> str | None:
        """Validate and normalize the log level name."""
        if v is None or v == "":
            return None
        level = str(v).strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @property
    def is_production(self) -> bool:
        """Check if running in production environment."""
        return self.environment == Environment.PRODUCTION


# Global settings instance - only initialize when actually used
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get or create settings instance (lazy loading)."""
    global _settings
    if _settings is None:
        # Using model_validate to avoid type checker errors about missing arguments
        _settings = Settings.model_validate({})  # type: ignore[call-overload]
    return _settings


# Module-level settings instance for direct access and IDE autocomplete
settings: Settings = get_settings()
