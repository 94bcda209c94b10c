"""Shared plumbing for the test suite."""

import io
from contextlib import redirect_stdout
from itertools import product
from pathlib import Path

from gromov_width.cli import main

DATA = Path(__file__).resolve().parent.parent / "demo" / "data"
EXPECTED = Path(__file__).resolve().parent.parent / "demo" / "expected"


def run_cli(*argv):
    """Run the CLI in-process, returning (exit_code, captured_stdout)."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def primitive_box(dim, bound):
    """All primitive integer vectors with coordinates in [-bound, bound]."""
    from math import gcd

    out = []
    for v in product(range(-bound, bound + 1), repeat=dim):
        if any(v) and gcd(*(abs(c) for c in v)) == 1:
            out.append(v)
    return out
