import pytest

from lcl_cli.algebra.exactnum import NumberField
from lcl_cli.catalog import catalog
from lcl_cli.groups.moebius import MoebiusElement


@pytest.fixture(scope="module")
def rationals():
    return NumberField([0, 1])


@pytest.fixture(scope="module")
def golden():
    return NumberField([-1, -1, 1])


@pytest.fixture(scope="module")
def gaussian():
    return NumberField([1, 0, 1])


@pytest.fixture(scope="module")
def sqrt2():
    return NumberField([-2, 0, 1])


@pytest.fixture(scope="module")
def schottky_pair(rationals):
    g = MoebiusElement.from_rows(rationals, [[2, 0], [0, "1/2"]])
    h = MoebiusElement.from_rows(rationals, [[1, 1], [1, 2]])
    return g, h


@pytest.fixture(scope="module")
def hecke5():
    return catalog("hecke", 5).build()


@pytest.fixture(scope="module")
def diagonal2():
    return catalog("psl2z-diag", 2).build()


@pytest.fixture(scope="module")
def quat_remark():
    return catalog("quat-remark").build()
