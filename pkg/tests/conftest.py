import pytest

from trinodiff.gf2m import make_field

# filled in by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[3, 5, 7], ids=lambda m: f"m{m}")
def small_ctx(request):
    return make_field(request.param)


@pytest.fixture
def ctx5():
    return make_field(5)


@pytest.fixture
def ctx7():
    return make_field(7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
