"""Documented fault-injection switches for the mutation tests.

`verify paper --mutate <name>` flips one of these for the run; each mutation
must make at least one scenario fail.  Production code paths read the flags
but never set them.
"""

from __future__ import annotations

from contextlib import contextmanager

BROKEN_SCHUBERT_NORMALIZATION = False
TRIVIAL_CLASP_FIXTURE = False

NAMES = ("broken-schubert", "trivial-clasp")


@contextmanager
def mutation(name: str):
    """Enable one named mutation for the duration of the block."""
    global BROKEN_SCHUBERT_NORMALIZATION, TRIVIAL_CLASP_FIXTURE
    if name == "broken-schubert":
        BROKEN_SCHUBERT_NORMALIZATION = True
        try:
            yield
        finally:
            BROKEN_SCHUBERT_NORMALIZATION = False
    elif name == "trivial-clasp":
        TRIVIAL_CLASP_FIXTURE = True
        try:
            yield
        finally:
            TRIVIAL_CLASP_FIXTURE = False
    else:
        raise ValueError(f"unknown mutation {name!r}; choose from {NAMES}")
