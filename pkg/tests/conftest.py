import numpy as np
import pytest

from hughesptr import field_ctx


@pytest.fixture(scope="session")
def ctx9():
    return field_ctx(3, 1)


@pytest.fixture(scope="session")
def ctx25():
    return field_ctx(5, 1)


@pytest.fixture(scope="session")
def ctx49():
    return field_ctx(7, 1)


@pytest.fixture(scope="session")
def ctx81():
    return field_ctx(3, 2)


def random_elements(ctx, n, seed=0):
    rng = np.random.default_rng(seed)
    return [ctx.element_from_index(int(i)) for i in rng.integers(0, ctx.Q, n)]
