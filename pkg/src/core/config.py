"""
Application configuration management
"""
import logging
import os
from functools import lru_cache
from pathlib import Path

from pydantic import Field, BaseModel, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Get the project root directory
ROOT_DIR = Path(__file__).parent.parent.parent
ENV_FILE = ROOT_DIR / ".env"


class GeneralSettings(BaseModel):
    log_level: str = "INFO"
    project_name: str = "otm-thermo"
    version: str = "0.1.0"

    # Override from environment variables
    @model_validator(mode='after')
    def override_from_env(self) -> "GeneralSettings":
        if "LOG_LEVEL" in os.environ:
            self.log_level = os.environ["LOG_LEVEL"]
        if "PROJECT_NAME" in os.environ:
            self.project_name = os.environ["PROJECT_NAME"]
        if "VERSION" in os.environ:
            self.version = os.environ["VERSION"]
        return self


class NumericsSettings(BaseModel):
    """Tolerances shared by every numerical module"""
    tol_herm: float = 1e-10
    tol_trace: float = 1e-10
    tol_psd: float = 1e-10
    degeneracy_rtol: float = 1e-9
    support_floor: float = 1e-14
    identity_rtol: float = 1e-8
    inequality_slack: float = 1e-9
    tpm_max_dim: int = 256

    # Override from environment variables
    @model_validator(mode='after')
    def override_from_env(self) -> "NumericsSettings":
        env_prefix = "OTM_"
        for name in ("tol_herm", "tol_trace", "tol_psd", "degeneracy_rtol",
                     "support_floor", "identity_rtol", "inequality_slack"):
            key = f"{env_prefix}{name.upper()}"
            if os.environ.get(key):
                setattr(self, name, float(os.environ[key]))
        if os.environ.get(f"{env_prefix}TPM_MAX_DIM"):
            self.tpm_max_dim = int(os.environ[f"{env_prefix}TPM_MAX_DIM"])
        return self


class RuntimeSettings(BaseModel):
    threads: int = 1
    timestamp: bool = True  # header line in CSV output
    default_format: str = "csv"  # Options: "csv", "json"

    # Override from environment variables
    @model_validator(mode='after')
    def override_from_env(self) -> "RuntimeSettings":
        if os.environ.get("OTM_THREADS"):
            self.threads = int(os.environ["OTM_THREADS"])
        if os.environ.get("OTM_TIMESTAMP"):
            self.timestamp = os.environ["OTM_TIMESTAMP"].lower() == "true"
        if os.environ.get("OTM_FORMAT"):
            self.default_format = os.environ["OTM_FORMAT"]
        return self


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables
    """
    # Config model for Pydantic
    model_config = SettingsConfigDict(
        env_file=str(ENV_FILE),
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",  # ignore extra environment variables
    )

    # Environment setting
    ENV: str = Field("development", description="Environment name")

    # Nested settings models
    general: GeneralSettings = GeneralSettings()
    numerics: NumericsSettings = NumericsSettings()
    runtime: RuntimeSettings = RuntimeSettings()

    def __init__(self, **data):
        """Initialize settings from environment variables"""
        super().__init__(**data)

        if self.general.log_level.upper() == "DEBUG":
            logging.debug("Configuration loaded from:")
            logging.debug(f"  - Environment variables (.env file at: {ENV_FILE})")
            logging.debug("  - System environment variables")

    # Uppercase aliases for nested settings
    @property
    def PROJECT_NAME(self) -> str:
        return self.general.project_name

    @property
    def VERSION(self) -> str:
        return self.general.version

    @property
    def LOG_LEVEL(self) -> str:
        return self.general.log_level


@lru_cache()
def get_settings() -> Settings:
    """
    Create and cache a Settings instance
    """
    return Settings()


# Create a non-cached instance to allow runtime modifications
settings = Settings()
