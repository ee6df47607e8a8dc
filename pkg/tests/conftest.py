import pytest
from mpmath import mp

from zetax.numerics import ToleranceConfig


@pytest.fixture(scope="session")
def cfg():
    return ToleranceConfig(30)


@pytest.fixture(scope="session")
def fast_cfg():
    return ToleranceConfig(15)


@pytest.fixture(scope="session")
def table_rows(cfg):
    from zetax.repulsion import table1
    return table1(cfg)


@pytest.fixture(autouse=True)
def _restore_precision():
    dps = mp.dps
    yield
    mp.dps = dps
