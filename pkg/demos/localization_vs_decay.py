"""
Localization versus decay on the cycle
======================================

The quantum walk keeps roughly half its probability on the cycle forever;
the classical walk leaks everything into the half-line like 1/sqrt(t).
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

topology = LollipopTopology(25)
times = [1000, 2000, 5000, 10000, 20000]

state = make_basis_state(topology, CycleNode(12), Coin.RIGHT)
quantum = {t: summarize(d) for t, d in evolve_quantum(state, times[-1], times)}

dist = make_point_distribution(topology, CycleNode(12))
classical = {t: summarize(d) for t, d in evolve_classical(dist, times[-1], times)}

print(f"{'t':>6}  {'quantum cycle total':>20}  {'classical cycle total':>22}")
for t in times:
    print(f"{t:>6}  {quantum[t].cycle_total:>20.5f}  {classical[t].cycle_total:>22.5f}")

# the classical column should fall by ~sqrt(2) per doubling; check one ratio
ratio = classical[20000].cycle_total / classical[10000].cycle_total
print(f"\nclassical P(20000)/P(10000) = {ratio:.4f}  (1/sqrt(2) = 0.7071)")
print(f"quantum stays near one half: P(20000) = {quantum[20000].cycle_total:.4f}")
