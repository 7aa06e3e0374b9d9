"""Operator catalog loaders."""

from .yaml_operator_catalog import YamlOperatorCatalog

__all__ = ["YamlOperatorCatalog"]
