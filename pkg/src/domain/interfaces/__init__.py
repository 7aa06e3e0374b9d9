"""Domain interfaces."""

from .operator_catalog import CatalogEntry, OperatorCatalog

__all__ = ["CatalogEntry", "OperatorCatalog"]
