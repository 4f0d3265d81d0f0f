from functools import lru_cache

import pytest

from hgx import corpus

ACCEPTANCE_KEY = pytest.StashKey[dict]()


@lru_cache(maxsize=None)
def workspace(name: str):
    return corpus.load(name)


@pytest.fixture
def ws():
    return workspace


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = {}


@pytest.fixture
def acceptance(request):
    """Record ``(criterion, ok, detail)`` for the end-of-run summary."""
    log = request.config.stash[ACCEPTANCE_KEY]

    def record(number: int, title: str, ok: bool, detail: str = ""):
        log[number] = (title, ok, detail)
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" -- {detail}" if detail else "")
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(ACCEPTANCE_KEY, {})
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 15):
        if n in log:
            title, ok, detail = log[n]
            line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title}"
            if detail:
                line += f" -- {detail}"
        else:
            line = f"criterion {n:2d} NOT RUN"
        terminalreporter.write_line(line)
