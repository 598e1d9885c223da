"""
How much of the whole trace can broadcasting save?
==================================================

Grows the broadcast set from "nothing" to "every title" in popularity
order and totals network transmissions for the whole trace.  With perfect
knowledge the curve only goes down.  With guessed locations, broadcasting
the long tail stops paying: mistaken cells pile up faster than missed
visits disappear, which is exactly why the planner should stop at the
popular head of the catalog.
"""

from prepush import (
    CASE_ASSUMED_LOCATION,
    CASE_LIMITED_COVERAGE,
    CASE_PERFECT,
    SynthParams,
    generate,
    traffic_vs_broadcast_ratio,
)

dataset = generate(
    SynthParams(n_users=2000, n_titles=1000, n_cells=500,
                n_visits=200_000, seed=2024)
)
ratios = tuple(round(0.05 * k, 2) for k in range(21))

curves = {
    "perfect": traffic_vs_broadcast_ratio(dataset, CASE_PERFECT, ratios),
    "assumed": traffic_vs_broadcast_ratio(dataset, CASE_ASSUMED_LOCATION, ratios),
    "limited 20%": traffic_vs_broadcast_ratio(
        dataset, CASE_LIMITED_COVERAGE, ratios, coverage=0.2
    ),
}

baseline = dataset.total_visits
print(f"unicast baseline: {baseline} transmissions\n")
print("broadcast ratio |   perfect |   assumed | limited 20%")
for i, p in enumerate(ratios):
    if p in (0.0, 0.05, 0.1, 0.2, 0.5, 1.0):
        row = " | ".join(f"{curves[m][i][1]:>9}" for m in curves)
        print(f"{p:>15.2f} | {row}")

for mode, curve in curves.items():
    best_ratio, best_total = min(curve, key=lambda pt: (pt[1], pt[0]))
    print(f"\n{mode:<11}: best at ratio {best_ratio:.2f} -> "
          f"{best_total} transmissions ({best_total / baseline:.1%} of baseline)")

# ---------------------------------------------------------------------------
# Optional figure.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, ax = plt.subplots(figsize=(6, 4))
    for mode, curve in curves.items():
        ax.plot([p for p, _ in curve],
                [total / baseline for _, total in curve],
                marker="o", ms=3, label=mode)
    ax.set_xlabel("fraction of most popular titles broadcast")
    ax.set_ylabel("total transmissions / unicast baseline")
    ax.legend()
    fig.tight_layout()
    fig.savefig("traffic_vs_ratio.png", dpi=120)
    print("figure saved to traffic_vs_ratio.png")
