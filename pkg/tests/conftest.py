import pytest

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance verdict and fail the test if it is negative."""
    lines = request.config.stash[_LINES_KEY]

    def record(number: int, title: str, checks: dict[str, bool], detail: str = "") -> None:
        ok = all(checks.values())
        failed = [k for k, v in checks.items() if not v]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}"
        if detail:
            line += f" ({detail})"
        if failed:
            line += " failed: " + ", ".join(failed)
        lines.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
