from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from helpers import make_random_records, seeded_rng
from prepush import (
    UnknownIdError,
    VisitRecord,
    build_indexes,
    estimate_target_cells,
    most_active_cell,
    partition_cells,
    rank_title_visitors,
)


def simple_dataset():
    return build_indexes(
        [
            VisitRecord("u1", "t1", "A"),
            VisitRecord("u1", "t2", "A"),
            VisitRecord("u1", "t3", "A"),
            VisitRecord("u1", "t1", "B"),
            VisitRecord("u2", "t1", "B"),
        ]
    )


class TestMostActiveCell:
    def test_majority_cell_wins(self):
        assert most_active_cell(simple_dataset(), "u1") == "A"

    def test_single_visit_user(self):
        assert most_active_cell(simple_dataset(), "u2") == "B"

    def test_tie_breaks_ascending_cell(self):
        ds = build_indexes(
            [
                VisitRecord("u1", "t1", "B"),
                VisitRecord("u1", "t2", "B"),
                VisitRecord("u1", "t3", "A"),
                VisitRecord("u1", "t4", "A"),
            ]
        )
        assert most_active_cell(ds, "u1") == "A"

    def test_unknown_user(self):
        with pytest.raises(UnknownIdError):
            most_active_cell(simple_dataset(), "u9")


class TestRankTitleVisitors:
    def test_global_activity_order(self):
        # u1 has 4 global visits, u2 has 1; both visited t1.
        assert rank_title_visitors(simple_dataset(), "t1") == ["u1", "u2"]

    def test_singleton(self):
        assert rank_title_visitors(simple_dataset(), "t2") == ["u1"]

    def test_activity_tie_breaks_by_user_id(self):
        ds = build_indexes(
            [VisitRecord("ub", "t1", "A"), VisitRecord("ua", "t1", "B")]
        )
        assert rank_title_visitors(ds, "t1") == ["ua", "ub"]

    def test_unknown_title(self):
        with pytest.raises(UnknownIdError):
            rank_title_visitors(simple_dataset(), "t9")

    def test_matches_bruteforce_sort(self):
        for seed in range(20):
            records = make_random_records(seeded_rng(200 + seed))
            ds = build_indexes(records)
            for title in ds.title_visits:
                assert rank_title_visitors(ds, title) == oracle.ranked_visitors(
                    records, title
                )


class TestEstimateTargetCells:
    def test_single_visitor_any_coverage(self):
        ds = simple_dataset()
        for coverage in (0.01, 0.5, 1.0):
            assert estimate_target_cells(ds, "t2", coverage) == {"A"}

    def test_set_semantics_deduplicate(self):
        ds = build_indexes(
            [VisitRecord("u1", "t1", "A"), VisitRecord("u2", "t1", "A")]
        )
        assert estimate_target_cells(ds, "t1", 1.0) == {"A"}

    @pytest.mark.parametrize("coverage", [0.0, -0.2, 1.5])
    def test_coverage_validated(self, coverage):
        with pytest.raises(ValueError):
            estimate_target_cells(simple_dataset(), "t1", coverage)

    def test_unknown_title(self):
        with pytest.raises(UnknownIdError):
            estimate_target_cells(simple_dataset(), "t9", 0.5)

    def test_matches_bruteforce_on_coverage_grid(self):
        grid = [Fraction(k, 10) for k in range(1, 11)]
        for seed in range(30):
            records = make_random_records(
                seeded_rng(300 + seed), max_users=20, max_visits=120
            )
            ds = build_indexes(records)
            for title in ds.title_visits:
                for coverage in grid:
                    got = estimate_target_cells(ds, title, float(coverage))
                    assert got == oracle.target_cells(records, title, coverage)


class TestPartitionCells:
    def test_estimate_equals_actual(self):
        ds = simple_dataset()
        actual = frozenset(ds.title_cell_visits["t1"])
        part = partition_cells(ds, "t1", actual)
        assert part.missing == frozenset()
        assert part.mistaken == frozenset()
        assert part.hit == actual
        assert part.missed_visits == 0

    def test_empty_estimate_misses_everything(self):
        ds = simple_dataset()
        part = partition_cells(ds, "t1", frozenset())
        assert part.missing == part.actual
        assert part.missed_visits == ds.title_visits["t1"]

    def test_hand_worked_partition(self):
        # t1 visited in A(2), B(1); estimate covers B plus phantom Z.
        ds = build_indexes(
            [
                VisitRecord("u1", "t1", "A"),
                VisitRecord("u2", "t1", "A"),
                VisitRecord("u3", "t1", "B"),
            ]
        )
        part = partition_cells(ds, "t1", {"B", "Z"})
        assert part.hit == {"B"}
        assert part.missing == {"A"}
        assert part.mistaken == {"Z"}
        assert part.missed_visits == 2

    def test_unknown_title(self):
        with pytest.raises(UnknownIdError):
            partition_cells(simple_dataset(), "t9", frozenset())


record_ids = st.integers(min_value=1, max_value=5)
records_strategy = st.lists(
    st.builds(
        lambda u, t, c: VisitRecord(f"u{u}", f"t{t}", f"c{c}"),
        record_ids, record_ids, record_ids,
    ),
    min_size=1,
    max_size=60,
)
cell_pool = st.sets(
    st.integers(1, 8).map(lambda c: f"c{c}"), min_size=0, max_size=8
)


@given(records_strategy, cell_pool)
@settings(max_examples=150)
def test_partition_identities(records, estimated):
    ds = build_indexes(records)
    title = records[0].title_id
    part = partition_cells(ds, title, estimated)
    assert part.hit == part.estimated & part.actual
    assert part.missing == part.actual - part.estimated
    assert part.mistaken == part.estimated - part.actual
    assert len(part.hit) + len(part.missing) == len(part.actual)
    assert len(part.hit) + len(part.mistaken) == len(part.estimated)
    assert not (part.hit & part.missing)
    assert not (part.hit & part.mistaken)
    assert not (part.missing & part.mistaken)
    assert part.missed_visits <= ds.title_visits[title]
    if not part.missing:
        assert part.missed_visits == 0
    o_hit, o_missing, o_mistaken, o_missed = oracle.partition(
        records, title, estimated
    )
    assert (part.hit, part.missing, part.mistaken) == (
        frozenset(o_hit), frozenset(o_missing), frozenset(o_mistaken)
    )
    assert part.missed_visits == o_missed


@given(records_strategy)
@settings(max_examples=100)
def test_coverage_monotonicity(records):
    ds = build_indexes(records)
    title = records[0].title_id
    grid = [k / 10 for k in range(1, 11)]
    prev_cells = None
    prev_missed = None
    for coverage in grid:
        cells = estimate_target_cells(ds, title, coverage)
        part = partition_cells(ds, title, cells)
        if prev_cells is not None:
            assert prev_cells <= cells
            assert part.missed_visits <= prev_missed
        prev_cells = cells
        prev_missed = part.missed_visits


def test_perfect_placement_collapse():
    # Rewrite every visit into its visitor's most active cell; afterwards
    # each user has exactly one cell, so full-coverage estimates must equal
    # the actual cell set of every title.
    for seed in range(10):
        records = make_random_records(seeded_rng(400 + seed))
        ds = build_indexes(records)
        collapsed = [
            VisitRecord(r.user_id, r.title_id, most_active_cell(ds, r.user_id))
            for r in records
        ]
        cds = build_indexes(collapsed)
        for title in cds.title_visits:
            estimated = estimate_target_cells(cds, title, 1.0)
            part = partition_cells(cds, title, estimated)
            assert part.estimated == part.actual
            assert part.missed_visits == 0
