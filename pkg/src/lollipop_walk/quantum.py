"""Coined discrete-time quantum walk engine on the lollipop graph.

One step applies, at every site, a coin mix followed by a shift to the
adjacent sites.  Degree-2 sites (cycle away from the junction, half-line)
use the Hadamard-type rule with weight sqrt(2)/2; the degree-3 junction
uses the Grover coin (diagonal -1/3, off-diagonal 2/3) over its (L, R,
Down) components, routed to [n-1], [1], and half-line site 1.

The half-line is stored as a finite buffer that grows geometrically ahead
of the walker's light cone: after t steps the support cannot pass site t,
so truncation is exact, never approximate.
"""

from __future__ import annotations

import math

import numpy as np

from . import _driver
from .topology import Coin, CycleNode, HalfLineNode, LollipopTopology, Site

SQRT_HALF = math.sqrt(0.5)

_MIN_EXTENT = 2


class WalkerState:
    """Amplitudes of the quantum walker over (site, coin) basis states.

    Cycle amplitudes live in two length-n arrays (Left and Right coins);
    half-line amplitudes live in two buffers indexed by site, where index 0
    of the Down buffer is the junction's Down coin and index 0 of the Up
    buffer is structurally zero.  Each step writes into a second buffer and
    swaps; growth ahead of the frontier keeps every representable amplitude
    exact.  Complex double precision throughout, even though real launches
    stay real.
    """

    def __init__(self, topology: LollipopTopology, extent: int = _MIN_EXTENT):
        extent = max(int(extent), _MIN_EXTENT)
        n = topology.cycle_size
        self.topology = topology
        self.time = 0
        self._left = np.zeros(n, dtype=np.complex128)
        self._right = np.zeros(n, dtype=np.complex128)
        self._down = np.zeros(extent + 1, dtype=np.complex128)
        self._up = np.zeros(extent + 1, dtype=np.complex128)
        self._left_back = np.zeros(n, dtype=np.complex128)
        self._right_back = np.zeros(n, dtype=np.complex128)
        self._down_back = np.zeros(extent + 1, dtype=np.complex128)
        self._up_back = np.zeros(extent + 1, dtype=np.complex128)
        # upper bound on the largest occupied half-line site
        self._frontier = 0

    @property
    def extent(self) -> int:
        """Largest half-line site currently representable."""
        return len(self._down) - 1

    def amplitude(self, site: Site, coin: Coin):
        """Amplitude of one basis state (0 for half-line sites past the buffer)."""
        self.topology.check_state(site, coin)
        if isinstance(site, CycleNode):
            if coin is Coin.LEFT:
                return complex(self._left[site.index])
            if coin is Coin.RIGHT:
                return complex(self._right[site.index])
            return complex(self._down[0])
        if site.index > self.extent:
            return 0j
        arr = self._down if coin is Coin.DOWN else self._up
        return complex(arr[site.index])

    def norm(self) -> float:
        """Euclidean norm of the full amplitude vector."""
        total = (
            np.vdot(self._left, self._left).real
            + np.vdot(self._right, self._right).real
            + np.vdot(self._down, self._down).real
            + np.vdot(self._up, self._up).real
        )
        return math.sqrt(total)

    def copy(self) -> "WalkerState":
        dup = WalkerState(self.topology, self.extent)
        dup.time = self.time
        dup._frontier = self._frontier
        dup._left[:] = self._left
        dup._right[:] = self._right
        dup._down[:] = self._down
        dup._up[:] = self._up
        return dup

    def reserve(self, min_extent: int) -> None:
        """Grow the half-line buffers so that `extent >= min_extent`.

        Newly exposed sites hold exact zeros.  Growth is at least a doubling,
        so repeated stepping stays amortized O(1) per site update.
        """
        if min_extent <= self.extent:
            return
        new_extent = max(2 * self.extent, min_extent)
        for name in ("_down", "_up"):
            old = getattr(self, name)
            fresh = np.zeros(new_extent + 1, dtype=np.complex128)
            fresh[: old.size] = old
            setattr(self, name, fresh)
        self._down_back = np.zeros(new_extent + 1, dtype=np.complex128)
        self._up_back = np.zeros(new_extent + 1, dtype=np.complex128)

    def step(self) -> None:
        """Apply one walk step (coin then shift) via the back buffers."""
        m = self._frontier
        if m + 2 > self.extent:
            self.reserve(m + 2)
            m = self._frontier
        n = self.topology.cycle_size
        cl, cr, d, u = self._left, self._right, self._down, self._up
        ncl, ncr, nd, nu = (
            self._left_back,
            self._right_back,
            self._down_back,
            self._up_back,
        )

        # junction: Grover coin over (L, R, Down), routed to [n-1]L, [1]R, (1)Up
        l0, r0, d0 = cl[0], cr[0], d[0]
        to_left = (2.0 * (r0 + d0) - l0) / 3.0
        to_right = (2.0 * (l0 + d0) - r0) / 3.0
        to_up = (2.0 * (l0 + r0) - d0) / 3.0

        # cycle, gathered at the target: [k]L <- [k+1], [k]R <- [k-1]
        np.add(cl[1:n], cr[1:n], out=ncl[0 : n - 1])
        ncl[0 : n - 1] *= SQRT_HALF
        np.subtract(cl[1 : n - 1], cr[1 : n - 1], out=ncr[2:n])
        ncr[2:n] *= SQRT_HALF
        ncr[0] = SQRT_HALF * (cl[n - 1] - cr[n - 1])
        ncl[n - 1] = to_left
        ncr[1] = to_right

        # half-line: (x)Down <- x+1, (x)Up <- x-1; index 0 of Down is the junction
        np.add(d[1 : m + 1], u[1 : m + 1], out=nd[0:m])
        nd[0:m] *= SQRT_HALF
        np.subtract(d[1 : m + 1], u[1 : m + 1], out=nu[2 : m + 2])
        nu[2 : m + 2] *= SQRT_HALF
        nd[m : m + 2] = 0.0
        nu[0] = 0.0
        nu[1] = to_up

        self._left, self._left_back = ncl, cl
        self._right, self._right_back = ncr, cr
        self._down, self._down_back = nd, d
        self._up, self._up_back = nu, u
        self._frontier = m + 1
        self.time += 1


def make_basis_state(
    topology: LollipopTopology, site: Site, coin: Coin
) -> WalkerState:
    """Walker at time 0 with amplitude 1 on a single (site, coin) state."""
    topology.check_state(site, coin)
    if isinstance(site, HalfLineNode):
        state = WalkerState(topology, extent=site.index + 1)
        state._frontier = site.index
        if coin is Coin.DOWN:
            state._down[site.index] = 1.0
        else:
            state._up[site.index] = 1.0
        return state
    state = WalkerState(topology)
    if coin is Coin.LEFT:
        state._left[site.index] = 1.0
    elif coin is Coin.RIGHT:
        state._right[site.index] = 1.0
    else:
        state._down[0] = 1.0
    return state


def quantum_step(state: WalkerState) -> WalkerState:
    """Advance `state` one step and return it (buffer-swap update)."""
    state.step()
    return state


def evolve_quantum(
    state: WalkerState,
    total_steps: int,
    snapshot_times=(),
    observer=None,
):
    """Apply total_steps steps, snapshotting the position distribution.

    snapshot_times must be strictly increasing and within [0, total_steps];
    time 0 means the state before any step.  Each snapshot is handed to
    `observer` (if given) and collected.  Returns [(time, PositionDistribution)].
    """
    from .observables import position_distribution

    return _driver.run_walk(
        state, total_steps, snapshot_times, observer, position_distribution
    )
