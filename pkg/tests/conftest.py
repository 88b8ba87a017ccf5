import pytest

from birackpoly import datasets


@pytest.fixture(scope="session")
def rank2():
    return datasets.birack("rank2")


@pytest.fixture(scope="session")
def singleton():
    return datasets.birack("singleton")


@pytest.fixture(scope="session")
def beads_mod():
    return datasets.module("z5_beads")


@pytest.fixture(scope="session")
def mod_a():
    return datasets.module("z5q_a")


@pytest.fixture(scope="session")
def mod_b():
    return datasets.module("z5q_b")
