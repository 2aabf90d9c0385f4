import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-integration", action="store_true", default=False,
        help="also run the full corpus, the benchmark grid and the slow property suites"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "integration: slow end-to-end test, skipped without --run-integration")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-integration"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-integration")
    for item in items:
        if "integration" in item.keywords:
            item.add_marker(skip_slow)
