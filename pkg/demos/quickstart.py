"""
Quickstart: evolve both walks and read off a snapshot
=====================================================
"""

from lollipop_walk import (
    Coin,
    CycleNode,
    LollipopTopology,
    evolve_classical,
    evolve_quantum,
    make_basis_state,
    make_point_distribution,
    summarize,
)

# a 25-node cycle with a half-line glued on at node 0
topology = LollipopTopology(25)

# quantum walker: launched at cycle node 12, coin pointing Right
state = make_basis_state(topology, CycleNode(12), Coin.RIGHT)
snapshots = evolve_quantum(state, 500, snapshot_times=[0, 100, 500])

for t, dist in snapshots:
    rec = summarize(dist)
    print(
        f"quantum  t={t:>4}  cycle total {rec.cycle_total:.4f}  "
        f"spike [{rec.spike_site}] {rec.spike_height:.4f}"
    )

# classical walker: same launch site, no coin
dist0 = make_point_distribution(topology, CycleNode(12))
for t, dist in evolve_classical(dist0, 500, snapshot_times=[0, 100, 500]):
    rec = summarize(dist)
    print(
        f"classical t={t:>4}  cycle total {rec.cycle_total:.4f}  "
        f"spike [{rec.spike_site}] {rec.spike_height:.4f}"
    )
