"""Shared fixtures and the acceptance summary printed at the end of a run."""

from __future__ import annotations

import pytest

from angulate.gallery import decagon, square, torus

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def dec():
    return decagon()


@pytest.fixture
def tor():
    return torus()


@pytest.fixture
def sq():
    return square()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        tr.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
