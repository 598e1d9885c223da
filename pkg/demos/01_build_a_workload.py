"""
Building a synthetic access trace
=================================

Generates a seeded workload, writes it to the flat trace format, reads it
back, and inspects the dataset indexes every other demo builds on.
"""

from prepush import SynthParams, generate, parse_trace, write_trace

# ---------------------------------------------------------------------------
# A workload is described entirely by SynthParams.  The same seed always
# reproduces the same trace, byte for byte.
params = SynthParams(
    n_users=2000,
    n_titles=1000,
    n_cells=500,
    n_visits=200_000,
    seed=2024,
)
dataset = generate(params)

print(f"visits        : {dataset.total_visits}")
print(f"distinct users: {dataset.n_users}")
print(f"distinct titles: {dataset.n_titles}")

# ---------------------------------------------------------------------------
# The trace round-trips through a plain CSV file: one header line, then
# user_id,title_id,cell_id,timestamp per visit.
trace_path = "demo_trace.csv"
write_trace(dataset, trace_path)
reloaded = parse_trace(trace_path)
print(f"round trip intact: {reloaded == dataset}")

# ---------------------------------------------------------------------------
# Indexes are derived from the records: per-title visit counts and cell
# maps, per-user visit counts and cell histograms.
top_title = max(dataset.title_visits, key=dataset.title_visits.get)
print(f"most popular title: {top_title} "
      f"({dataset.title_visits[top_title]} visits, "
      f"{len(dataset.title_cell_visits[top_title])} distinct cells, "
      f"{len(dataset.title_users[top_title])} distinct visitors)")

busiest_user = max(dataset.user_visits, key=dataset.user_visits.get)
print(f"most active user : {busiest_user} "
      f"({dataset.user_visits[busiest_user]} visits over "
      f"{len(dataset.user_cell_visits[busiest_user])} cells)")
