"""Catalog listing and effective configuration."""

from typing import Any, Tuple

from ...domain.exceptions import CatalogError
from ..dtos import CommandRequest
from .base import CommandUseCase


class CatalogUseCase(CommandUseCase):
    name = "catalog"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        catalog = self.expressions.catalog
        if catalog is None:
            raise CatalogError("Operator catalog is disabled")
        tag = request.get("tag")
        entries = catalog.find_by_tag(tag) if tag else catalog.list_entries()
        return list(entries), f"{len(entries)} catalog operators"


class ConfigUseCase(CommandUseCase):
    name = "config"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        return self.settings.model_dump(mode="json"), "effective configuration"
