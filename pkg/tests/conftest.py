import pytest

from powspec.exact_linalg import char_poly_exact, matrix_of
from powspec.powergraph import build_model_graph, build_power_graph
from powspec.group_core import SemidihedralType

GRID = [(2, 3), (2, 5), (3, 3)]


@pytest.fixture(scope="session")
def model_graphs():
    return {(k, p): build_model_graph(k, p) for k, p in GRID}


@pytest.fixture(scope="session")
def true_graphs():
    return {(k, p): build_power_graph(SemidihedralType(k, p)) for k, p in GRID}


@pytest.fixture(scope="session")
def model_charpoly(model_graphs):
    """Memoized exact characteristic polynomials of the model matrices."""
    cache = {}

    def get(k, p, kind):
        key = (k, p, kind)
        if key not in cache:
            cache[key] = char_poly_exact(matrix_of(model_graphs[(k, p)], kind))
        return cache[key]

    return get


@pytest.fixture(scope="session")
def full_reports():
    """One complete verification run per grid point, shared across tests."""
    from powspec.verify_cli import run_verification

    return {(k, p): run_verification(k, p) for k, p in GRID}
