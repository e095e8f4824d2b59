import random
from pathlib import Path

import pytest

from itree.formats import iter_graph6
from itree.generators import random_graph

DATA = Path(__file__).parent / "data"

# triangle-free instances whose extraction uses a double step (found by search)
DOUBLE_STEP_GRAPHS = [
    "G[T?OW",
    "LB?X?EAG?Q_AO?",
    "W?OC??@?@??C@oOO??????A?OA?_???G??C?G?M?Oa_?d?A",
]


def load_atlas():
    with open(DATA / "atlas7.g6", "rb") as fh:
        return [g for _, g in iter_graph6(fh)]


def random_corpus(count=500, max_n=14, seed=20240611):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice([0.1, 0.2, 0.3, 0.5, 0.7])
        out.append(random_graph(n, p, seed + i))
    return out


@pytest.fixture(scope="session")
def atlas():
    return load_atlas()


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus()


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
