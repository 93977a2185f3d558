"""Shared fixtures for the test suite.

Module Information:
    - Filename: conftest.py
    - Location: tests/
"""

import pytest

from rogers_ramanujan.numerics import NumericContext


@pytest.fixture
def ctx() -> NumericContext:
    """A 50-digit context, the default precision policy."""
    return NumericContext(target_digits=50)


@pytest.fixture
def fast_ctx() -> NumericContext:
    """A 30-digit context for the slower end-to-end checks."""
    return NumericContext(target_digits=30)
