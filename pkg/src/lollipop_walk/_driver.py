"""Shared snapshot-collection loop for the two walk engines."""

from __future__ import annotations


def validate_snapshot_times(snapshot_times, total_steps: int) -> list[int]:
    times = [int(t) for t in snapshot_times]
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError(f"snapshot times must be strictly increasing: {times}")
    if times and (times[0] < 0 or times[-1] > total_steps):
        raise ValueError(
            f"snapshot times must lie in [0, {total_steps}]: {times}"
        )
    return times


def run_walk(state, total_steps, snapshot_times, observer, snapshot_fn):
    """Advance `state` by total_steps, collecting snapshots at the given times.

    `state` exposes step(); snapshot_fn turns it into a PositionDistribution.
    Returns [(time, distribution), ...] in time order.
    """
    if total_steps < 0:
        raise ValueError(f"total_steps must be >= 0, got {total_steps}")
    times = validate_snapshot_times(snapshot_times, total_steps)
    pending = iter(times)
    next_time = next(pending, None)
    collected = []

    def maybe_snapshot(t):
        nonlocal next_time
        if next_time == t:
            dist = snapshot_fn(state)
            if observer is not None:
                observer(dist)
            collected.append((t, dist))
            next_time = next(pending, None)

    maybe_snapshot(0)
    for t in range(1, total_steps + 1):
        state.step()
        maybe_snapshot(t)
    return collected
