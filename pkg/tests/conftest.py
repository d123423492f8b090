import pytest

# Concave-obtuse quadruples in quadrant order p1..p4, both with upward as
# their only hook type.  The center is p2 for A and p1 for B.
CONCAVE_P2 = [(1, 20), (-1, 2), (-100, -10), (100, -10)]
CONCAVE_P1 = [(1, 2), (-1, 20), (-100, -10), (100, -10)]


def stacked(base, scale, shift):
    return [(x * scale, y * scale + shift) for x, y in base]


def case21_points():
    return (
        stacked(CONCAVE_P2, 1, 0)
        + stacked(CONCAVE_P2, 1, 1)
        + stacked(CONCAVE_P1, 3, 25)
        + stacked(CONCAVE_P2, 8, 76)
        + stacked(CONCAVE_P2, 9, 87)
    )


def case22_points():
    return [p for k in range(5) for p in stacked(CONCAVE_P2, 1, k)]


def mirrored(points):
    return [(-x, y) for x, y in points]


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
TRIANGLE_CENTER = [(0, 0), (1000000, 0), (500000, 866025), (500000, 288675)]


@pytest.fixture
def square():
    return list(SQUARE)


# One line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
