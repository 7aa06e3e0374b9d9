"""
Unit tests for the YAML operator catalog.
"""

from pathlib import Path

import pytest

from src.adapters.catalog_loaders import YamlOperatorCatalog
from src.adapters.parsers import parse_operator
from src.domain.exceptions import CatalogError

from ..conftest import CATALAN


def write_catalog(root: Path, files: dict[str, str], master: str | None = None) -> YamlOperatorCatalog:
    for name, body in files.items():
        (root / name).write_text(body, encoding="utf-8")
    if master is None:
        listed = "\n".join(f"  - path: {name}" for name in files)
        master = f"version: 1\noperator_files:\n{listed}\n"
    (root / "catalog.yaml").write_text(master, encoding="utf-8")
    return YamlOperatorCatalog(root)


@pytest.mark.unit
class TestShippedCatalog:
    """The operators that ship with the package."""

    def test_entry_count(self, catalog):
        assert len(catalog) == 11
        assert [e.name for e in catalog.list_entries()] == sorted(e.name for e in catalog.list_entries())

    def test_every_entry_parses(self, catalog):
        for entry in catalog.list_entries():
            assert parse_operator(entry.operator).order >= 1, entry.name

    def test_research_orders(self, catalog):
        assert parse_operator(catalog.get("zagier_l4").operator).order == 4
        assert parse_operator(catalog.get("trident_l5").operator).order == 5

    def test_order1_tag(self, catalog):
        names = [e.name for e in catalog.find_by_tag("order1")]
        assert names == ["exp", "exp_arctan", "x3_minus_x_minus_1"]

    def test_lookup_with_prefix(self, catalog):
        entry = catalog.get("@catalan")
        assert entry.source == "elementary.yaml"
        assert parse_operator(entry.operator) == parse_operator(CATALAN)
        assert "@catalan" in catalog
        assert "catalan" in catalog

    def test_resolve(self, catalog):
        assert catalog.resolve(" @exp ") == "Dx - 1"
        assert catalog.resolve("Dx + x") == "Dx + x"

    def test_unknown_name(self, catalog):
        with pytest.raises(CatalogError) as exc_info:
            catalog.get("@nope")
        assert exc_info.value.details["name"] == "nope"
        assert exc_info.value.exit_code == 2


@pytest.mark.unit
class TestCatalogFiles:
    """Loading rules for catalog directories."""

    def test_folded_operator_text(self, tmp_path):
        catalog = write_catalog(
            tmp_path, {"a.yaml": "operators:\n  f:\n    operator: >-\n      Dx\n      - 1\n"}
        )
        assert catalog.get("f").operator == "Dx - 1"

    def test_duplicate_first_wins(self, tmp_path):
        catalog = write_catalog(
            tmp_path,
            {
                "a.yaml": "operators:\n  f:\n    operator: Dx - 1\n",
                "b.yaml": "operators:\n  f:\n    operator: Dx + 1\n  g:\n    operator: Dx\n",
            },
        )
        assert catalog.get("f").operator == "Dx - 1"
        assert len(catalog) == 2

    def test_disabled_file_skipped(self, tmp_path):
        master = (
            "operator_files:\n"
            "  - path: a.yaml\n"
            "  - path: b.yaml\n"
            "    enabled: false\n"
        )
        catalog = write_catalog(
            tmp_path,
            {
                "a.yaml": "operators:\n  f:\n    operator: Dx\n",
                "b.yaml": "operators:\n  g:\n    operator: Dx\n",
            },
            master,
        )
        assert "g" not in catalog
        assert len(catalog) == 1

    def test_unlisted_file_ignored(self, tmp_path):
        (tmp_path / "extra.yaml").write_text("operators:\n  h:\n    operator: Dx\n")
        catalog = write_catalog(tmp_path, {"a.yaml": "operators:\n  f:\n    operator: Dx\n"})
        assert "h" not in catalog

    def test_malformed_yaml(self, tmp_path):
        catalog = write_catalog(tmp_path, {"a.yaml": "operators: [unclosed\n"})
        with pytest.raises(CatalogError, match="Malformed"):
            catalog.list_entries()

    def test_non_mapping_file(self, tmp_path):
        catalog = write_catalog(tmp_path, {"a.yaml": "- just\n- a list\n"})
        with pytest.raises(CatalogError, match="mapping"):
            catalog.list_entries()

    def test_missing_operator_key(self, tmp_path):
        catalog = write_catalog(tmp_path, {"a.yaml": "operators:\n  f:\n    description: none\n"})
        with pytest.raises(CatalogError) as exc_info:
            catalog.get("f")
        assert exc_info.value.details["name"] == "f"

    def test_missing_master(self, tmp_path):
        with pytest.raises(CatalogError, match="Cannot read"):
            YamlOperatorCatalog(tmp_path).list_entries()

    def test_reload_picks_up_changes(self, tmp_path):
        catalog = write_catalog(tmp_path, {"a.yaml": "operators:\n  f:\n    operator: Dx\n"})
        assert len(catalog) == 1
        (tmp_path / "a.yaml").write_text("operators:\n  f:\n    operator: Dx\n  g:\n    operator: Dx\n")
        assert len(catalog) == 1
        catalog.reload()
        assert len(catalog) == 2
