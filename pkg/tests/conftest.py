import pytest

from g2def.homogeneous import BUILTINS, builtin, nearly_parallel_data


@pytest.fixture(scope="session")
def spaces():
    return {name: builtin(name) for name in BUILTINS}


@pytest.fixture(scope="session")
def npds(spaces):
    return {name: nearly_parallel_data(sp) for name, sp in spaces.items()}


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.summary_lines():
            terminalreporter.write_line(line)
