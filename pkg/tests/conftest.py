from pathlib import Path

import pytest

from mckaylab.chartable import import_table

DATA = Path(__file__).parent / "data"


def load_fixture(name: str):
    return import_table((DATA / name).read_text())


@pytest.fixture(scope="session")
def psl2_7_ref():
    return load_fixture("psl2_7_ref.json")


@pytest.fixture(scope="session")
def a5_ref():
    return load_fixture("a5_ref.json")


@pytest.fixture(scope="session")
def q8():
    return load_fixture("q8.json")
