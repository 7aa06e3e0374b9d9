"""
Configuration management for pcurv.

This module provides centralized configuration management using Pydantic settings.
It supports environment variables, .env files, and default values.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ... import __version__

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent.parent


class Environment(str, Enum):
    """Application environment."""
    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


class LogLevel(str, Enum):
    """Logging levels."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class ExecutorKind(str, Enum):
    """Worker pool used by concurrent scans."""
    PROCESS = "process"
    THREAD = "thread"


class ScanSettings(BaseSettings):
    """Prime scan configuration."""
    pmin: int = Field(default=2, ge=2, description="Smallest prime scanned")
    pmax: int = Field(default=200, ge=2, description="Largest prime scanned")
    workers: int = Field(default=1, ge=1, description="Worker count; 1 runs in-process")
    executor: ExecutorKind = Field(default=ExecutorKind.PROCESS)
    slow_prime_seconds: float = Field(
        default=10.0,
        description="Per-prime time above which a performance warning is logged"
    )

    model_config = SettingsConfigDict(env_prefix="SCAN_", extra="ignore")


class PCurvatureSettings(BaseSettings):
    """p-curvature algorithm defaults."""
    default_method: str = Field(
        default="recurrence",
        description="recurrence, remainders, crt or closed-form"
    )
    crt_points: Optional[str] = Field(
        default=None,
        description="Comma-separated CRT sample points"
    )

    @field_validator("default_method")
    @classmethod
    def validate_method(cls, v: str) -> str:
        allowed = {"recurrence", "remainders", "crt", "closed-form"}
        if v not in allowed:
            raise ValueError(f"default_method must be one of {sorted(allowed)}")
        return v

    model_config = SettingsConfigDict(env_prefix="PCURV_", extra="ignore")


class SeriesSettings(BaseSettings):
    """Series laboratory defaults."""
    default_terms: int = Field(default=20, ge=1)
    integrality_terms: int = Field(default=200, ge=1)
    log_order_slack: int = Field(default=10, ge=0)
    eisenstein_bound: int = Field(default=10**6, ge=1)

    model_config = SettingsConfigDict(env_prefix="SERIES_", extra="ignore")


class CatalogSettings(BaseSettings):
    """Operator catalog configuration."""
    catalog_dir: Path = Field(
        default=Path("operators"),
        description="Directory containing catalog.yaml"
    )
    enabled: bool = Field(default=True)

    @field_validator("catalog_dir")
    @classmethod
    def validate_catalog_dir(cls, v: Path) -> Path:
        """Resolve relative paths against the project root."""
        if not v.is_absolute():
            v = PROJECT_ROOT / v
        return v

    model_config = SettingsConfigDict(env_prefix="CATALOG_", extra="ignore")


class CacheSettings(BaseSettings):
    """Parse cache configuration."""
    max_size: int = Field(default=256, ge=0, description="Maximum cached expressions")

    model_config = SettingsConfigDict(env_prefix="CACHE_", extra="ignore")


class OutputSettings(BaseSettings):
    """Report output configuration."""
    include_timing: bool = Field(
        default=False,
        description="Add timing_ms to JSON reports (breaks byte-identical output)"
    )

    model_config = SettingsConfigDict(env_prefix="OUTPUT_", extra="ignore")


class Settings(BaseSettings):
    """Main application settings."""

    app_name: str = Field(default="pcurv", description="Application name")
    app_version: str = Field(default=__version__, description="Application version")
    environment: Environment = Field(default=Environment.DEVELOPMENT)
    debug: bool = Field(default=False, description="Debug mode")

    log_level: LogLevel = Field(default=LogLevel.WARNING)
    log_format: str = Field(default="text", description="Log format: json, text")
    log_file: Optional[Path] = Field(default=None, description="Log file path")

    scan: ScanSettings = Field(default_factory=ScanSettings)
    pcurvature: PCurvatureSettings = Field(default_factory=PCurvatureSettings)
    series: SeriesSettings = Field(default_factory=SeriesSettings)
    catalog: CatalogSettings = Field(default_factory=CatalogSettings)
    cache: CacheSettings = Field(default_factory=CacheSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        if v not in ("json", "text"):
            raise ValueError("log_format must be 'json' or 'text'")
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


# Singleton instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get application settings singleton."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings(env_file: Optional[Path] = None) -> Settings:
    """
    Force reload settings from the environment.

    Args:
        env_file: Alternative env file; its values feed every settings group
    """
    global _settings
    if env_file is None:
        _settings = Settings()
        return _settings
    _settings = Settings(
        _env_file=env_file,
        scan=ScanSettings(_env_file=env_file),
        pcurvature=PCurvatureSettings(_env_file=env_file),
        series=SeriesSettings(_env_file=env_file),
        catalog=CatalogSettings(_env_file=env_file),
        cache=CacheSettings(_env_file=env_file),
        output=OutputSettings(_env_file=env_file),
    )
    return _settings
