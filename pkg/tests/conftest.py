import pytest

from a1weyl import _backend

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=_backend.available_backends())
def backend(request):
    previous = _backend.use_backend(request.param)
    yield request.param
    _backend.use_backend(previous)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
