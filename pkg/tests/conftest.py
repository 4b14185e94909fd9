import pytest

from cycflat.lattice import boolean_lattice, build_lattice, chain
from cycflat.matroid import matroid_from_cyclic_flats


def b2():
    return build_lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def b3():
    return boolean_lattice(3)


def u23():
    return matroid_from_cyclic_flats(3, [(set(), 0), ({0, 1, 2}, 2)])


@pytest.fixture
def B2():
    return b2()


@pytest.fixture
def B3():
    return b3()


@pytest.fixture
def U23():
    return u23()


@pytest.fixture
def chain3():
    return chain(3)
