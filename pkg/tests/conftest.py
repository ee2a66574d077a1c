from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

# Make the sibling oracle helpers importable regardless of how pytest was invoked.
sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

from ringlab.catalog import build_entry, default_catalog  # noqa: E402
from ringlab.claims import theorem_suite  # noqa: E402


@pytest.fixture(scope="session")
def catalog_entries():
    return default_catalog()


@pytest.fixture(scope="session")
def catalog_rings(catalog_entries):
    """All catalog rings built once; per-ring caches are shared by the session."""
    return {entry.name: build_entry(entry) for entry in catalog_entries}


@pytest.fixture(scope="session")
def suite_results(catalog_entries, catalog_rings):
    return theorem_suite(catalog_entries, rings=catalog_rings)


@pytest.fixture(scope="session")
def verify_cli_run():
    """One subprocess run of `verify-paper --format json`, shared by all tests."""
    import json
    import subprocess

    proc = subprocess.run(
        [sys.executable, "-m", "ringlab", "verify-paper", "--format", "json"],
        capture_output=True,
        text=True,
    )
    results = None
    if proc.stdout.strip().startswith("["):
        results = json.loads(proc.stdout)
    return proc, results
