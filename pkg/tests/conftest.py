"""Shared fixtures.

The expensive artifacts (regular corpora, the exhaustive sweeps) are
session-scoped so the acceptance tests and the unit tests share one
computation each.  Build times land in the `timings` dict so the
acceptance suite can assert its runtime budgets regardless of which
test happened to build a fixture first.
"""

from __future__ import annotations

import time

import pytest

from tourney import enumeration, extremal


@pytest.fixture(scope="session")
def timings() -> dict[str, float]:
    return {}


@pytest.fixture(scope="session")
def corpus7(timings) -> enumeration.EnumCorpus:
    start = time.perf_counter()
    corpus = enumeration.enumerate_regular(7)
    timings["corpus7"] = time.perf_counter() - start
    return corpus


@pytest.fixture(scope="session")
def corpus9(timings) -> enumeration.EnumCorpus:
    start = time.perf_counter()
    corpus = enumeration.enumerate_regular(9)
    timings["corpus9"] = time.perf_counter() - start
    return corpus


@pytest.fixture(scope="session")
def sweep5(timings) -> extremal.SweepExtremes:
    start = time.perf_counter()
    result = extremal.verify_c5_max(5)
    timings["sweep5"] = time.perf_counter() - start
    return result


@pytest.fixture(scope="session")
def sweep7(timings) -> extremal.SweepExtremes:
    start = time.perf_counter()
    result = extremal.verify_c5_max(7)
    timings["sweep7"] = time.perf_counter() - start
    return result
