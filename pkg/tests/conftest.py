import os
import random

import pytest

SEED = int(os.environ.get("ALGETOWER_SEED") or 20240607)


@pytest.fixture
def rng(request):
    # one stream per test, stable under reordering
    return random.Random(f"{SEED}:{request.node.name}")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
