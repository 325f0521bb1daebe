import csv
from pathlib import Path

import pytest
from hypothesis import settings

DATA = Path(__file__).parent / "data"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def read_csv(name: str) -> list[dict]:
    with open(DATA / name, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


@pytest.fixture(scope="session")
def degree_tables() -> list[dict]:
    return read_csv("degree_tables.csv")


@pytest.fixture(scope="session")
def intermediate_tables() -> list[dict]:
    return read_csv("intermediate_tables.csv")


@pytest.fixture(scope="session")
def galois_counts() -> list[dict]:
    return read_csv("galois_counts.csv")
