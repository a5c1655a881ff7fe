from hypothesis import strategies as st

from hirzebruch.k0 import K0Class
from hirzebruch.surface import DivisorClass

small = st.integers(-12, 12)
divisors = st.builds(DivisorClass, small, small)


@st.composite
def classes(draw, n=2):
    """Lattice points satisfying the ch2 parity condition on F_n."""
    r, x, y, k = draw(small), draw(small), draw(small), draw(small)
    c_sq = 2 * x * y - n * y * y
    return K0Class(r, DivisorClass(x, y), 2 * k + c_sq % 2)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
