import numpy as np
import pytest

from multitime.dirac import ParticleKind
from multitime.lattice import make_grid
from multitime.mts import gaussian_packet, initial_state, product_field

# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split(".")[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def packet_state():
    """Two localized Dirac packets, m = 1, on a 64-point box of length 40."""
    grid = make_grid(64, 40.0)
    kind = ParticleKind.dirac(1.0)
    f1 = gaussian_packet(grid, -2.0, 1.5, 0.5, [1.0, 0.3j])
    f2 = gaussian_packet(grid, 3.0, 1.5, -0.4, [0.2, 1.0])
    return initial_state(product_field((grid, grid), [f1, f2]), (kind, kind))
