import pytest

from weyl_dl import build_weyl_group, character_table, conjugacy_classes


@pytest.fixture(scope="session")
def groups():
    """Enumerated groups shared across tests, keyed by (type, rank)."""
    cache = {}

    def get(type_label, rank):
        key = (type_label, rank)
        if key not in cache:
            cache[key] = build_weyl_group(type_label, rank)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def tables(groups):
    """Full-group character tables, computed once per type."""

    def get(type_label, rank):
        W = groups(type_label, rank)
        return W, conjugacy_classes(W), character_table(W)

    return get
