import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

# reproducible by default; pass --hypothesis-profile=explore for fresh examples
settings.register_profile("default", derandomize=True, deadline=None)
settings.register_profile("explore", deadline=None)
settings.load_profile("default")

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash[_LINES_KEY]

    @contextmanager
    def run(number: int, title: str, limit_s: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as err:
            lines.append(f"FAIL  [{number}] {title}  ({time.perf_counter() - start:.2f}s): "
                         f"{type(err).__name__}: {str(err).splitlines()[0] if str(err) else ''}")
            raise
        elapsed = time.perf_counter() - start
        if elapsed >= limit_s:
            lines.append(f"FAIL  [{number}] {title}  ({elapsed:.2f}s >= {limit_s}s limit)")
            pytest.fail(f"criterion {number} took {elapsed:.2f}s, limit {limit_s}s")
        lines.append(f"PASS  [{number}] {title}  ({elapsed:.2f}s)")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash[_LINES_KEY]
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda l: int(l.split("[")[1].split("]")[0])):
        terminalreporter.write_line(line)
