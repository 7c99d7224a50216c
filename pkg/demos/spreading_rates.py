"""
Ballistic versus diffusive spread on the half-line
==================================================

Doubling the time should double the quantum walker's conditional position
std (sigma ~ t) but only multiply the classical one by sqrt(2) (sigma ~ sqrt(t)).
"""

from lollipop_walk import (
    Coin,
    CycleNode,
    LollipopTopology,
    evolve_classical,
    evolve_quantum,
    halfline_moments,
    make_basis_state,
    make_point_distribution,
)

topology = LollipopTopology(25)
times = [2500, 5000, 10000]

state = make_basis_state(topology, CycleNode(12), Coin.RIGHT)
q_snaps = dict(evolve_quantum(state, times[-1], times))

dist = make_point_distribution(topology, CycleNode(12))
c_snaps = dict(evolve_classical(dist, times[-1], times))

print(f"{'t':>6}  {'quantum mean':>12}  {'quantum std':>11}  "
      f"{'classical mean':>14}  {'classical std':>13}")
for t in times:
    q_mean, q_std = halfline_moments(q_snaps[t])
    c_mean, c_std = halfline_moments(c_snaps[t])
    print(f"{t:>6}  {q_mean:>12.2f}  {q_std:>11.2f}  {c_mean:>14.2f}  {c_std:>13.2f}")

_, q1 = halfline_moments(q_snaps[5000])
_, q2 = halfline_moments(q_snaps[10000])
_, c1 = halfline_moments(c_snaps[5000])
_, c2 = halfline_moments(c_snaps[10000])
print(f"\nstd growth per time doubling: quantum {q2 / q1:.3f} (ballistic ~2), "
      f"classical {c2 / c1:.3f} (diffusive ~1.414)")
