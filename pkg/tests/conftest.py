import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20081005)


def random_words(rng, count, alphabet, max_len):
    for _ in range(count):
        n = rng.randint(0, max_len)
        yield "".join(rng.choice(alphabet) for _ in range(n))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
