import csv
from pathlib import Path

import pytest

from pebblegame import build_table, parse_cost

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def tables_100_20():
    return build_table(100, 20)


@pytest.fixture(scope="session")
def tables_64_64():
    return build_table(64, 64)


@pytest.fixture(scope="session")
def tables_2048_16():
    return build_table(2048, 16)


@pytest.fixture(scope="session")
def tables_32769_16():
    # Covers every threshold for S <= 16: the largest is at n = 2**15.
    return build_table(2**15 + 1, 16)


@pytest.fixture(scope="session")
def reference_costs():
    """Golden reference costs for 51 <= n <= 100, 1 <= S <= 20, as {(n, s): Cost}."""
    values = {}
    with open(DATA_DIR / "reference_costs_51_100.csv", newline="") as handle:
        reader = csv.reader(handle)
        next(reader)
        for row in reader:
            n = int(row[0])
            for s in range(1, 21):
                values[n, s] = parse_cost(row[s])
    return values
