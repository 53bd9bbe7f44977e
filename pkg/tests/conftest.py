import os
import random

import pytest

SEED = int(os.environ.get("SPECTRAL_SEED", "20260808"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def subseed(k: int) -> random.Random:
    return random.Random(SEED * 1000003 + k)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    tr = terminalreporter
    rows = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in tr.stats.get(status, []):
            if "test_acceptance" in rep.nodeid and rep.when == "call":
                rows.append((rep.nodeid.split("::")[-1], label))
    if rows:
        tr.section("acceptance criteria")
        for name, label in sorted(rows):
            tr.write_line(f"{name}: {label}")
