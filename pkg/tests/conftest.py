import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="run the extended slow acceptance tier",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: extended slow tier (enable with --slow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="extended tier: run with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
