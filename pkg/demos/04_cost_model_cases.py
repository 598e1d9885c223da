"""
What does broadcasting one hot title cost?
==========================================

Walks a popular title through the transmission cost model.  The unicast
baseline pays one transmission per visit.  Broadcasting pays one
transmission per targeted cell plus unicast for every visit the broadcast
missed, so the interesting question is where to point the broadcasts:

* perfect knowledge      - broadcast exactly in the cells that get visits
* assumed locations      - target every visitor's most active cell
* limited coverage (20%) - target only the most active fifth of visitors
"""

from prepush import (
    SynthParams,
    coverage_cost,
    estimate_target_cells,
    generate,
    partition_cells,
    perfect_cost,
    titles_by_popularity,
    unicast_cost,
)

dataset = generate(
    SynthParams(n_users=2000, n_titles=1000, n_cells=500,
                n_visits=200_000, seed=2024)
)
title = titles_by_popularity(dataset)[0]
baseline = unicast_cost(dataset, title)
print(f"title {title}: {baseline} visits -> unicast baseline {baseline}\n")

# ---------------------------------------------------------------------------
# The three planning regimes, most to least informed.
rows = [
    ("perfect", perfect_cost(dataset, title)),
    ("assumed (cov 1.0)", coverage_cost(dataset, title, 1.0)),
    ("limited (cov 0.2)", coverage_cost(dataset, title, 0.2)),
]
print("case               | broadcasts | missed | total | vs unicast")
for label, bd in rows:
    print(f"{label:<18} | {bd.broadcast_transmissions:>10} | "
          f"{bd.missed_visits:>6} | {bd.total_transmissions:>5} | "
          f"{bd.total_transmissions / baseline:6.1%}")

# ---------------------------------------------------------------------------
# Why the assumed-location case loses some ground: the estimated cell set
# only partially overlaps the cells that actually get visits.
estimated = estimate_target_cells(dataset, title, 1.0)
part = partition_cells(dataset, title, estimated)
print(f"\ncell partition at coverage 1.0:")
print(f"  estimated {len(part.estimated)} vs actual {len(part.actual)}")
print(f"  hit {len(part.hit)}, missing {len(part.missing)} "
      f"(carrying {part.missed_visits} visits), mistaken {len(part.mistaken)}")
# Every missing cell leaves its visits on unicast; every mistaken cell is
# a broadcast nobody needed.
