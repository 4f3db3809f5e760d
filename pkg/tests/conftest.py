import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def brute_partitions(n, max_part=None):
    """Independent oracle: weakly decreasing part lists, plain recursion."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in brute_partitions(n - first, first):
            yield (first,) + rest


def pentagonal_p(N):
    """p(0..N) from Euler's pentagonal recurrence."""
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p


@pytest.fixture(scope="session")
def golden_spt():
    """{(n, k): spt_k(n)} for 1 <= k <= 6, 1 <= n <= 29, as tabulated."""
    out = {}
    with open(DATA / "spt_table.csv") as fh:
        for row in csv.DictReader(fh):
            n = int(row["n"])
            for k in range(1, 7):
                out[(n, k)] = int(row[f"k{k}"])
    return out


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
