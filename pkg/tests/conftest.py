import time

import pytest

from wellhued import compute_row, enumerate_connected_nonisomorphic


@pytest.fixture(scope="session")
def census():
    """Search rows for every connected graph on 2..7 vertices, with wall time.

    Returns (rows, elapsed_seconds); shared by the acceptance gate and the
    atlas tests so the census is only computed once per session.
    """
    t0 = time.monotonic()
    rows = []
    for n in range(2, 8):
        for g in enumerate_connected_nonisomorphic(n):
            rows.append(compute_row(g))
    return rows, time.monotonic() - t0
