"""Figures for delay reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import DelayRow  # noqa: E402


def plot_delays(rows: list[DelayRow], path: str | Path) -> Path:
    """Max delay, mean delay and max candidate pool against instance size, log-log."""
    path = Path(path)
    fig, (ax_delay, ax_pool) = plt.subplots(1, 2, figsize=(9, 3.6), constrained_layout=True)
    sizes = [r.vertices for r in rows]
    ax_delay.plot(sizes, [max(r.max_delay, 1) for r in rows], "o-", label="max delay")
    ax_delay.plot(sizes, [max(r.mean_delay, 1) for r in rows], "s--", label="mean delay")
    ax_delay.set_xscale("log")
    ax_delay.set_yscale("log")
    ax_delay.set_xlabel("vertices")
    ax_delay.set_ylabel("work units")
    ax_delay.legend(frameon=False)

    ax_pool.plot(sizes, [max(r.max_pool, 1) for r in rows], "o-", label="max pool")
    ax_pool.plot(sizes, [r.pool_bound for r in rows], ":", color="grey", label="n² + n + 2")
    ax_pool.set_xscale("log")
    ax_pool.set_yscale("log")
    ax_pool.set_xlabel("vertices")
    ax_pool.set_ylabel("candidates per node")
    ax_pool.legend(frameon=False)

    if rows:
        fig.suptitle(f"{rows[0].kind} on {rows[0].family}")
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
