from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def read_ranks(name):
    rows = []
    for line in (FIXTURES / name).read_text().splitlines():
        if line and not line.startswith("#"):
            d, r = line.split()
            rows.append((int(d), int(r)))
    return rows


@pytest.fixture(scope="session")
def sextic_ranks():
    return read_ranks("sextic_ranks.txt")


@pytest.fixture(scope="session")
def quartic_ranks():
    return read_ranks("quartic_ranks.txt")


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome, props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, outcome, detail in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {crit}  {detail}")
