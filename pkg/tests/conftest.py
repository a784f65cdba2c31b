import pytest

from qshuffle import basis, cartan


@pytest.fixture(scope="session")
def tables():
    """Session-wide table factory so vector caches are shared across tests."""
    cache: dict[tuple[str, tuple[int, ...] | None], basis.GoodLyndonTable] = {}

    def get(label: str, order: tuple[int, ...] | None = None) -> basis.GoodLyndonTable:
        key = (label, order)
        if key not in cache:
            cache[key] = basis.GoodLyndonTable(cartan.parse(label), order)
        return cache[key]

    return get
