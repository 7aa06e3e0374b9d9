"""Configuration infrastructure for pcurv."""

from .settings import (
    CacheSettings,
    CatalogSettings,
    Environment,
    ExecutorKind,
    LogLevel,
    OutputSettings,
    PCurvatureSettings,
    ScanSettings,
    SeriesSettings,
    Settings,
    get_settings,
    reload_settings,
)

__all__ = [
    "Settings",
    "get_settings",
    "reload_settings",
    "Environment",
    "ExecutorKind",
    "LogLevel",
    "ScanSettings",
    "PCurvatureSettings",
    "SeriesSettings",
    "CatalogSettings",
    "CacheSettings",
    "OutputSettings",
]
