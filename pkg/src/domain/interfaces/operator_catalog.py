"""
Operator catalog interface.

Defines the contract for named-operator storage and lookup.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class CatalogEntry:
    """A named operator as stored, before parsing."""

    name: str
    operator: str
    description: str = ""
    tags: Tuple[str, ...] = field(default_factory=tuple)
    source: Optional[str] = None


class OperatorCatalog(ABC):
    """
    Abstract interface for operator catalogs.

    Entries hold the operator text; parsing is left to the caller so that a
    catalog never depends on the expression grammar.
    """

    @abstractmethod
    def get(self, name: str) -> CatalogEntry:
        """
        Retrieve an entry by name.

        Args:
            name: Entry name, with or without a leading ``@``

        Raises:
            CatalogError: If no entry has that name
        """

    @abstractmethod
    def list_entries(self) -> List[CatalogEntry]:
        """All entries, sorted by name."""

    @abstractmethod
    def find_by_tag(self, tag: str) -> List[CatalogEntry]:
        """Entries carrying ``tag``, sorted by name."""

    def resolve(self, text: str) -> str:
        """Operator text for ``@name`` references; other text passes through."""
        stripped = text.strip()
        if stripped.startswith("@"):
            return self.get(stripped).operator
        return text

    def __contains__(self, name: str) -> bool:
        return any(e.name == name.lstrip("@") for e in self.list_entries())

    def __len__(self) -> int:
        return len(self.list_entries())
