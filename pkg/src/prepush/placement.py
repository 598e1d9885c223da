"""Most-active-cell broadcast placement and cell-set partitions.

Pushing content to a user's device requires guessing which cell the user
is in.  Since a user's own traffic concentrates heavily on one or two
cells, the heuristic here targets each user's single most visited cell.
Comparing the targeted (estimated) cell set against the cells where a
title's visits actually happened partitions the cells into hits (targeted
and visited), missing (visited but not targeted; those visits still go out
as unicast), and mistaken (targeted but never visited; wasted broadcasts).
"""

from dataclasses import dataclass

from .errors import UnknownIdError
from .rounding import ceil_count


@dataclass(frozen=True)
class CellPartition:
    """Estimated-vs-actual cell sets for one title's broadcast plan."""

    estimated: frozenset
    actual: frozenset
    hit: frozenset
    missing: frozenset
    mistaken: frozenset
    missed_visits: int


def most_active_cell(dataset, user):
    """The user's cell with the most visits (ties by ascending cell id)."""
    try:
        cells = dataset.user_cell_visits[user]
    except KeyError:
        raise UnknownIdError("user", user) from None
    return min(cells.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def rank_title_visitors(dataset, title):
    """The title's distinct visitors, most globally active first.

    Activity is the user's total visit count across all titles; ties break
    by ascending user id.
    """
    try:
        visitors = dataset.title_users[title]
    except KeyError:
        raise UnknownIdError("title", title) from None
    user_visits = dataset.user_visits
    return sorted(visitors, key=lambda u: (-user_visits[u], u))


def estimate_target_cells(dataset, title, coverage):
    """Cells to broadcast the title into, under an oracle of given coverage.

    The prediction oracle is assumed to identify the most active fraction
    of the title's future visitors; each predicted visitor is targeted in
    their most active cell.

    Parameters
    ----------
    dataset : TraceDataset
    title : str
    coverage : float
        Fraction of the title's visitors the oracle predicts, in (0, 1].
        The target user count rounds up, so any positive coverage targets
        at least one user; coverage 1.0 targets every visitor.

    Returns
    -------
    frozenset of cell ids
    """
    if not 0 < coverage <= 1:
        raise ValueError(f"coverage must be in (0, 1], got {coverage}")
    ranked = rank_title_visitors(dataset, title)
    k = max(1, ceil_count(coverage, len(ranked)))
    return frozenset(most_active_cell(dataset, u) for u in ranked[:k])


def partition_cells(dataset, title, estimated):
    """Partition estimated vs actual cells for one title.

    ``actual`` is the set of cells where the title's visits occurred;
    ``missed_visits`` counts the title's visits in cells the estimate did
    not cover (a visit in any estimated cell is satisfied by the
    broadcast, regardless of which target user brought that cell in).
    """
    try:
        cell_counts = dataset.title_cell_visits[title]
    except KeyError:
        raise UnknownIdError("title", title) from None
    estimated = frozenset(estimated)
    actual = frozenset(cell_counts)
    hit = estimated & actual
    missing = actual - estimated
    mistaken = estimated - actual
    missed_visits = sum(cell_counts[c] for c in missing)
    return CellPartition(
        estimated=estimated,
        actual=actual,
        hit=hit,
        missing=missing,
        mistaken=mistaken,
        missed_visits=missed_visits,
    )
