import pytest

from wittpaths.counters.path_counts import clear_caches


@pytest.fixture
def fresh_caches():
    """Run a test against empty counter caches."""
    clear_caches()
    yield
    clear_caches()
