"""
YAML operator catalog adapter.

Loads named operators from ``catalog.yaml`` and the entry files it lists.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from ...domain.exceptions import CatalogError
from ...domain.interfaces import CatalogEntry, OperatorCatalog


logger = logging.getLogger(__name__)

MASTER_FILE = "catalog.yaml"


class YamlOperatorCatalog(OperatorCatalog):
    """Catalog backed by a directory of YAML files, loaded lazily once."""

    def __init__(self, catalog_dir: Path) -> None:
        """
        Initialize the catalog.

        Args:
            catalog_dir: Directory containing ``catalog.yaml``
        """
        self.catalog_dir = Path(catalog_dir)
        self._entries: Optional[Dict[str, CatalogEntry]] = None

    def _read(self, path: Path) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except OSError as e:
            raise CatalogError(f"Cannot read catalog file: {e}", path=str(path)) from e
        except yaml.YAMLError as e:
            raise CatalogError(f"Malformed catalog file: {e}", path=str(path)) from e
        if not isinstance(data, dict):
            raise CatalogError("Catalog file must contain a mapping", path=str(path))
        return data

    def _load(self) -> Dict[str, CatalogEntry]:
        if self._entries is not None:
            return self._entries
        master = self._read(self.catalog_dir / MASTER_FILE)
        entries: Dict[str, CatalogEntry] = {}
        for file_config in master.get("operator_files", []):
            if not file_config.get("enabled", True):
                continue
            path = self.catalog_dir / file_config["path"]
            for name, data in self._read(path).get("operators", {}).items():
                if name in entries:
                    logger.warning("Duplicate catalog entry %s in %s ignored", name, path)
                    continue
                entries[name] = self._create_entry(name, data, path)
        logger.info("Loaded %d catalog operators", len(entries))
        self._entries = entries
        return entries

    @staticmethod
    def _create_entry(name: str, data: Dict[str, Any], path: Path) -> CatalogEntry:
        if "operator" not in data:
            raise CatalogError(f"Entry '{name}' has no operator", name=name, path=str(path))
        operator = " ".join(str(data["operator"]).split())
        return CatalogEntry(
            name=name,
            operator=operator,
            description=str(data.get("description", "")).strip(),
            tags=tuple(data.get("tags", [])),
            source=path.name,
        )

    def get(self, name: str) -> CatalogEntry:
        key = name.strip().lstrip("@")
        entry = self._load().get(key)
        if entry is None:
            raise CatalogError(f"Unknown catalog operator '@{key}'", name=key)
        return entry

    def list_entries(self) -> List[CatalogEntry]:
        return [self._load()[k] for k in sorted(self._load())]

    def find_by_tag(self, tag: str) -> List[CatalogEntry]:
        return [e for e in self.list_entries() if tag in e.tags]

    def reload(self) -> None:
        self._entries = None
