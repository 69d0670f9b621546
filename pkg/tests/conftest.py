import random

import pytest

from sspower import new_game

ACCEPTANCE_LINES = []


@pytest.fixture
def figure1():
    return new_game(50, [40, 30, 20, 10])


@pytest.fixture
def record_criterion():
    def record(number, passed, detail):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {detail}")
        return passed

    return record


def random_game(rng: random.Random, n_max=7, w_max=20, n_min=1):
    n = rng.randint(n_min, n_max)
    weights = [rng.randint(1, w_max) for _ in range(n)]
    return new_game(rng.randint(1, sum(weights)), weights)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
