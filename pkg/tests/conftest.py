import pytest

from quasitree import tables
from quasitree.diagram import parse_pd, reidemeister_3


@pytest.fixture(scope="session")
def atlas():
    return tables.load_fixture(tables.KNOTATLAS)


@pytest.fixture(scope="session")
def atlas_r3(atlas):
    return reidemeister_3(atlas, tables.r3_face())


@pytest.fixture(scope="session")
def knotscape():
    return tables.load_fixture(tables.KNOTSCAPE)


@pytest.fixture(scope="session")
def trefoil():
    return tables.load_fixture("trefoil.pd")


@pytest.fixture(scope="session")
def figure_eight():
    return tables.load_fixture("figure_eight.pd")


@pytest.fixture(scope="session")
def kink():
    return tables.load_fixture("unknot_kink.pd")


@pytest.fixture(scope="session")
def knot_table():
    from quasitree.cli import read_table

    rows, bad = read_table(tables.fixture_path(tables.KNOT_TABLE).read_text())
    assert not bad
    return [(name, parse_pd(pd, name=name), det) for _, name, pd, det in rows]
