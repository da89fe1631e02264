from __future__ import annotations

import json
from pathlib import Path

import pytest

from coesemigroups.oracle import all_semigroups_up_to_genus
from coesemigroups.trees import EnumerationBound, Family, TreeSpec, enumerate_tree

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def genus_counts() -> dict:
    return json.loads((FIXTURES / "genus_counts.json").read_text())


@pytest.fixture(scope="session")
def all_up_to_15():
    return all_semigroups_up_to_genus(15)


@pytest.fixture(scope="session")
def all_up_to_10(all_up_to_15):
    return [S for S in all_up_to_15 if S.genus <= 10]


@pytest.fixture(scope="session")
def coe_tree_20():
    spec = TreeSpec(Family.ALL, bound=EnumerationBound(max_genus=20))
    return list(enumerate_tree(spec))


@pytest.fixture(scope="session")
def coe_up_to_20(coe_tree_20):
    return [node.semigroup for node in coe_tree_20]


@pytest.fixture(scope="session")
def coe_up_to_15(coe_up_to_20):
    return [S for S in coe_up_to_20 if S.genus <= 15]


ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line per exit criterion; echoed now and in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
