"""Transmission cost model for content pre-push broadcasting.

Accounting is time-agnostic and counts one transmission per event: the
unicast baseline pays one transmission per visit, and a broadcast pays one
transmission per (title, cell) it is pushed into.  Visits in cells the
broadcast did not reach still go out as unicast, so for one title

    total = broadcast_transmissions + missed_visits.

Three planning regimes are modeled.  With perfect knowledge the title is
broadcast exactly in the cells its visits occur in (no missed visits).
With assumed locations every visitor is targeted in their most active
cell.  With limited coverage only the most active fraction of the title's
visitors is predicted and targeted; raising the coverage buys back missed
visits at the price of more broadcast cells, and the total is generally
U-shaped in coverage rather than monotone.
"""

from dataclasses import dataclass

from .errors import UnknownIdError
from .placement import estimate_target_cells, partition_cells, rank_title_visitors, most_active_cell
from .rounding import ceil_count

CASE_UNICAST = "unicast"
CASE_PERFECT = "perfect"
CASE_ASSUMED_LOCATION = "assumed_location"
CASE_LIMITED_COVERAGE = "limited_coverage"

TRAFFIC_MODES = (CASE_PERFECT, CASE_ASSUMED_LOCATION, CASE_LIMITED_COVERAGE)

#: Coverage fractions 0.05, 0.10, ..., 1.00 used when no grid is given.
DEFAULT_COVERAGE_GRID = tuple(round(0.05 * k, 2) for k in range(1, 21))

#: Oracle coverage used for the limited-coverage traffic curve by default.
DEFAULT_LIMITED_COVERAGE = 0.2


@dataclass(frozen=True)
class CostBreakdown:
    """Per-title transmission accounting for one planning regime."""

    title_id: str
    case: str
    coverage: float
    broadcast_transmissions: int
    missed_visits: int
    total_transmissions: int


@dataclass(frozen=True)
class CoverageSweep:
    """Total cost of one title as a function of oracle coverage."""

    title_id: str
    grid: tuple
    costs: tuple
    unicast_baseline: int
    optimal_coverage: float
    optimal_cost: int


def unicast_cost(dataset, title):
    """Baseline transmissions for one title: one per visit."""
    try:
        return dataset.title_visits[title]
    except KeyError:
        raise UnknownIdError("title", title) from None


def unicast_breakdown(dataset, title):
    """The unicast baseline as a :class:`CostBreakdown` (no broadcasting)."""
    visits = unicast_cost(dataset, title)
    return CostBreakdown(
        title_id=title,
        case=CASE_UNICAST,
        coverage=0.0,
        broadcast_transmissions=0,
        missed_visits=visits,
        total_transmissions=visits,
    )


def perfect_cost(dataset, title):
    """Cost with perfect prediction and known locations.

    The title is broadcast once in every cell it is actually visited in,
    so the total is the number of distinct visited cells and never exceeds
    the unicast baseline.
    """
    try:
        n_cells = len(dataset.title_cell_visits[title])
    except KeyError:
        raise UnknownIdError("title", title) from None
    return CostBreakdown(
        title_id=title,
        case=CASE_PERFECT,
        coverage=1.0,
        broadcast_transmissions=n_cells,
        missed_visits=0,
        total_transmissions=n_cells,
    )


def broadcast_cost(dataset, title, target_cells, case=CASE_ASSUMED_LOCATION,
                   coverage=1.0):
    """Cost of broadcasting one title into an arbitrary cell set.

    One transmission per target cell, plus unicast for every visit in
    cells the target set does not cover.
    """
    partition = partition_cells(dataset, title, target_cells)
    n_targets = len(partition.estimated)
    return CostBreakdown(
        title_id=title,
        case=case,
        coverage=coverage,
        broadcast_transmissions=n_targets,
        missed_visits=partition.missed_visits,
        total_transmissions=n_targets + partition.missed_visits,
    )


def coverage_cost(dataset, title, coverage):
    """Cost under most-active-cell placement at a given oracle coverage.

    Coverage 1.0 targets every visitor in their most active cell; smaller
    values restrict the broadcast to the most active fraction of the
    title's visitors.
    """
    cells = estimate_target_cells(dataset, title, coverage)
    case = CASE_ASSUMED_LOCATION if coverage == 1.0 else CASE_LIMITED_COVERAGE
    return broadcast_cost(dataset, title, cells, case=case, coverage=coverage)


def _validate_fraction_grid(grid, name, low_open):
    if len(grid) == 0:
        raise ValueError(f"{name} must be non-empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError(f"{name} must be strictly increasing")
    lo, hi = grid[0], grid[-1]
    if (lo <= 0 if low_open else lo < 0) or hi > 1:
        bound = "(0, 1]" if low_open else "[0, 1]"
        raise ValueError(f"{name} values must lie in {bound}")


def sweep_coverage(dataset, title, grid=DEFAULT_COVERAGE_GRID):
    """Evaluate one title's cost over a coverage grid and pick the argmin.

    Parameters
    ----------
    dataset : TraceDataset
    title : str
    grid : sequence of float
        Strictly increasing coverage fractions in (0, 1].

    Returns
    -------
    CoverageSweep
        ``costs[i]`` equals ``coverage_cost(dataset, title, grid[i])``'s
        total; ties for the optimum go to the smallest coverage.

    Notes
    -----
    The grid is walked incrementally (the target user prefix only grows
    with coverage), which keeps a full sweep linear in the title's visitor
    count instead of quadratic.
    """
    grid = tuple(grid)
    _validate_fraction_grid(grid, "coverage grid", low_open=True)
    ranked = rank_title_visitors(dataset, title)
    target_cells = [most_active_cell(dataset, u) for u in ranked]
    cell_counts = dataset.title_cell_visits[title]
    visits = dataset.title_visits[title]

    costs = []
    estimated = set()
    covered_visits = 0
    taken = 0
    for coverage in grid:
        k = max(1, ceil_count(coverage, len(ranked)))
        while taken < k:
            cell = target_cells[taken]
            taken += 1
            if cell not in estimated:
                estimated.add(cell)
                covered_visits += cell_counts.get(cell, 0)
        costs.append(len(estimated) + visits - covered_visits)

    best = min(range(len(grid)), key=lambda i: (costs[i], i))
    return CoverageSweep(
        title_id=title,
        grid=grid,
        costs=tuple(costs),
        unicast_baseline=visits,
        optimal_coverage=grid[best],
        optimal_cost=costs[best],
    )


def titles_by_popularity(dataset):
    """All titles sorted by descending visit count, ties by ascending id."""
    return sorted(dataset.title_visits, key=lambda t: (-dataset.title_visits[t], t))


def traffic_vs_broadcast_ratio(dataset, mode, ratios,
                               coverage=DEFAULT_LIMITED_COVERAGE):
    """Whole-trace transmissions as the broadcast title set grows.

    For each ratio p, the top ``ceil(p * n_titles)`` titles by popularity
    are broadcast under the given mode and every other title stays
    unicast.

    Parameters
    ----------
    dataset : TraceDataset
    mode : {"perfect", "assumed_location", "limited_coverage"}
        Per-title costing regime for broadcast titles.
    ratios : sequence of float
        Strictly increasing fractions in [0, 1]; p = 0 yields the unicast
        baseline (total visit count) exactly.
    coverage : float
        Oracle coverage for mode "limited_coverage" (default 0.2); ignored
        for "perfect" and forced to 1.0 for "assumed_location".

    Returns
    -------
    list of (ratio, total_transmissions)
    """
    if mode not in TRAFFIC_MODES:
        raise ValueError(f"unknown mode: {mode!r}")
    ratios = tuple(ratios)
    _validate_fraction_grid(ratios, "ratio grid", low_open=False)
    if mode == CASE_LIMITED_COVERAGE and not 0 < coverage <= 1:
        raise ValueError(f"coverage must be in (0, 1], got {coverage}")

    ordered = titles_by_popularity(dataset)
    if mode == CASE_PERFECT:
        def title_cost(t):
            return len(dataset.title_cell_visits[t])
    elif mode == CASE_ASSUMED_LOCATION:
        def title_cost(t):
            return coverage_cost(dataset, t, 1.0).total_transmissions
    else:
        def title_cost(t):
            return coverage_cost(dataset, t, coverage).total_transmissions

    # Prefix sums over the popularity order let every ratio be answered
    # without re-costing titles.
    broadcast_prefix = [0]
    visit_prefix = [0]
    for t in ordered:
        broadcast_prefix.append(broadcast_prefix[-1] + title_cost(t))
        visit_prefix.append(visit_prefix[-1] + dataset.title_visits[t])

    total_visits = dataset.total_visits
    curve = []
    for p in ratios:
        k = max(0, ceil_count(p, len(ordered)))
        total = broadcast_prefix[k] + (total_visits - visit_prefix[k])
        curve.append((p, total))
    return curve
