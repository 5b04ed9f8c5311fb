import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--extended",
        action="store_true",
        default=False,
        help="run the extended exhaustive checks (minutes-long full span scans)",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "extended: long exhaustive runs, enabled with --extended or RINGCOL_EXTENDED=1"
    )


def _extended_enabled(config) -> bool:
    return config.getoption("--extended") or os.environ.get("RINGCOL_EXTENDED") == "1"


def pytest_collection_modifyitems(config, items):
    if _extended_enabled(config):
        return
    skip = pytest.mark.skip(reason="extended check; enable with --extended or RINGCOL_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
