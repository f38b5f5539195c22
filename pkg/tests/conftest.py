import pytest

from revga.oracles import (
    bfs_signed_distances,
    bfs_unsigned_distances,
    default_cache_dir,
)


@pytest.fixture(scope="session")
def cache_dir():
    return default_cache_dir()


@pytest.fixture(scope="session")
def signed_table_5(cache_dir):
    return bfs_signed_distances(5, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def signed_table_7(cache_dir):
    return bfs_signed_distances(7, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def unsigned_table_8(cache_dir):
    return bfs_unsigned_distances(8, cache_dir=cache_dir)
