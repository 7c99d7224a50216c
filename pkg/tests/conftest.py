"""Shared fixtures.

The four long 25-node benchmark runs are session-scoped so the whole suite
pays for them once (around three minutes total on a typical machine).
"""

from __future__ import annotations

import pytest

from lollipop_walk import (
    Coin,
    CycleNode,
    LollipopTopology,
    evolve_classical,
    evolve_quantum,
    make_basis_state,
    make_point_distribution,
)

BENCH_TIMES = (20000, 50000, 100000)
BENCH_STEPS = 100000
# extra early snapshots feed the spreading-rate checks
SNAPSHOT_TIMES = (0, 5000, 10000) + BENCH_TIMES


@pytest.fixture(scope="session")
def topology25():
    return LollipopTopology(25)


@pytest.fixture(scope="session")
def quantum_cycle12(topology25):
    """Quantum walk from cycle node 12 (Right coin): snapshots and final state."""
    state = make_basis_state(topology25, CycleNode(12), Coin.RIGHT)
    snaps = evolve_quantum(state, BENCH_STEPS, SNAPSHOT_TIMES)
    return dict(snaps), state


@pytest.fixture(scope="session")
def classical_cycle12(topology25):
    """Classical walk from cycle node 12: snapshots and final distribution."""
    dist = make_point_distribution(topology25, CycleNode(12))
    snaps = evolve_classical(dist, BENCH_STEPS, SNAPSHOT_TIMES)
    return dict(snaps), dist


@pytest.fixture(scope="session")
def quantum_junction_down(topology25):
    """Quantum walk launched down the half-line from the junction."""
    state = make_basis_state(topology25, CycleNode(0), Coin.DOWN)
    snaps = evolve_quantum(state, BENCH_STEPS, BENCH_TIMES)
    return dict(snaps), state


@pytest.fixture(scope="session")
def classical_junction(topology25):
    """Classical walk launched at the junction."""
    dist = make_point_distribution(topology25, CycleNode(0))
    snaps = evolve_classical(dist, BENCH_STEPS, BENCH_TIMES)
    return dict(snaps), dist
