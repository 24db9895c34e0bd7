import pytest
from hypothesis import settings

DEFAULT_SEED = 0


def pytest_addoption(parser):
    parser.addoption("--seed", action="store", type=int, default=None,
                     help="seed for the hypothesis-based property tests")


def pytest_configure(config):
    seed = config.getoption("--seed")
    if seed is None:
        settings.register_profile("ospkit", derandomize=True, deadline=None, max_examples=60)
    else:
        settings.register_profile("ospkit", deadline=None, max_examples=60)
        config.option.hypothesis_seed = seed
    settings.load_profile("ospkit")


@pytest.fixture
def seed(request):
    s = request.config.getoption("--seed")
    return DEFAULT_SEED if s is None else s


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
