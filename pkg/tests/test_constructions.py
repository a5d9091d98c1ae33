"""Closed-form constructions and their measured laws."""

from fractions import Fraction

import pytest

from longhop import (
    DomainError,
    GeneratorSet,
    augment_odd_b,
    b3_overhead,
    bisection_fwht,
    distance_profile,
    folded_cube,
    hd_ladder,
    hd_metrics,
    hypercube,
    lh_hd,
    lh_hd_reduced,
    low_density_b3,
    mesh,
    optimize_secondary,
)
from longhop.constructions import b3_default_columns


def test_basic_families():
    assert hypercube(4).hops == (1, 2, 4, 8)
    assert folded_cube(4).hops == (1, 2, 4, 8, 15)
    assert mesh(3).hops == tuple(range(1, 8))
    with pytest.raises(DomainError):
        mesh(15)


def test_hd_ladder_values():
    assert hd_ladder(3) == (4, 6, 7)
    assert hd_ladder(4) == (8, 12, 14, 15)
    assert hd_ladder(6) == (32, 48, 56, 60, 62, 63)


def test_lh_hd_hops_descend_from_the_top():
    gens = lh_hd(4, 12)
    assert gens.hops == tuple(range(15, 3, -1))
    with pytest.raises(DomainError):
        lh_hd(4, 9)


def test_hd_metrics_closed_forms():
    assert hd_metrics(4, 8) == (4, 2, Fraction(22, 16))
    assert hd_metrics(3, 7) == (4, 1, Fraction(7, 8))
    with pytest.raises(DomainError):
        hd_metrics(4, 10)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_hd_law_measured(d):
    n = 1 << d
    for m in hd_ladder(d):
        gens = lh_hd(d, m)
        b, diameter, avg = hd_metrics(d, m)
        assert b == (m + 1) // 2
        assert bisection_fwht(gens).b == b
        prof = distance_profile(gens)
        assert prof.diameter == diameter
        assert prof.avg == avg == Fraction(2 * n - 2 - m, n)
        # The memorable "2 - m/n" form overshoots by exactly 2/n: it
        # books the origin at distance 2 instead of 0.
        assert Fraction(2) - Fraction(m, n) - prof.avg == Fraction(2, n)


def test_lh_hd_reduced_examples():
    base = lh_hd(4, 8)
    assert bisection_fwht(base).b == 4
    assert bisection_fwht(lh_hd_reduced(base, 1)).b == 3
    assert bisection_fwht(lh_hd_reduced(base, 2)).b == 2


@pytest.mark.parametrize("d", [3, 4, 5])
def test_lh_hd_reduced_law(d):
    n = 1 << d
    for m in hd_ladder(d):
        base = lh_hd(d, m)
        b = (m + 1) // 2
        for r in (1, 2):
            if m - r < d:
                continue
            expect = b - 1 if (r == 2 and m == n - 2) else b - r
            assert bisection_fwht(lh_hd_reduced(base, r)).b == expect


def test_lh_hd_reduced_validation():
    base = lh_hd(4, 8)
    with pytest.raises(DomainError):
        lh_hd_reduced(base, 3)
    shuffled = GeneratorSet(4, tuple(reversed(base.hops)))
    with pytest.raises(DomainError):
        lh_hd_reduced(shuffled, 1)


def test_b3_overhead_values():
    assert [b3_overhead(d) for d in range(3, 13)] == [3, 3, 4, 4, 4, 4, 4, 4, 4, 5]
    with pytest.raises(DomainError):
        b3_overhead(0)


def test_b3_default_columns_smallest_valid():
    assert b3_default_columns(3) == (3, 5, 6)
    assert b3_default_columns(4) == (3, 5, 6, 7)
    # The naive smallest choice at d=5 would emit a duplicate weight-1
    # hop, so the default skips it.
    assert b3_default_columns(5) != (3, 5, 6, 7, 9)


@pytest.mark.parametrize(
    "d,hops",
    [
        (3, (1, 2, 4, 3, 5, 6)),
        (4, (1, 2, 4, 8, 7, 0xB, 0xD)),
        (5, (1, 2, 4, 8, 0x10, 3, 0xC, 0x15, 0x1A)),
        (6, (1, 2, 4, 8, 0x10, 0x20, 3, 0x1C, 0x2D, 0x36)),
        (8, tuple(1 << i for i in range(8)) + (0xF, 0x71, 0xB6, 0xDA)),
        (12, tuple(1 << i for i in range(12)) + (3, 0xFC, 0x71C, 0xB65, 0xDAA)),
    ],
)
def test_low_density_b3_goldens(d, hops):
    gens = low_density_b3(d)
    assert gens.hops == hops
    assert gens.m == d + b3_overhead(d)
    assert bisection_fwht(gens).b == 3


def test_low_density_b3_custom_columns():
    gens = low_density_b3(3, columns=(3, 5, 7))
    assert gens.hops == (1, 2, 4, 3, 5, 7)
    assert bisection_fwht(gens).b == 3


@pytest.mark.parametrize(
    "d,columns",
    [
        (3, (3, 5)),            # wrong count
        (3, (3, 3, 5)),         # duplicate pattern
        (3, (1, 3, 5)),         # weight-1 pattern
        (3, (3, 5, 9)),         # wider than L bits
        (5, (3, 5, 6, 7, 9)),   # collapses to a duplicate of hop 1
    ],
)
def test_low_density_b3_rejects_bad_columns(d, columns):
    with pytest.raises(DomainError):
        low_density_b3(d, columns=columns)


def test_low_density_b3_dimension_guard():
    with pytest.raises(DomainError):
        low_density_b3(2)


def test_augment_lifts_odd_b():
    lifted = augment_odd_b(GeneratorSet(3, (1, 2, 4)))
    assert lifted.hops == (1, 2, 4, 7)
    assert bisection_fwht(lifted).b == 2

    code74_hops = GeneratorSet(4, (1, 2, 4, 8, 7, 0xE, 0xB))
    lifted = augment_odd_b(code74_hops)
    assert lifted.hops[-1] == 0xD
    assert bisection_fwht(lifted).b == 4


def test_augment_rejects_even_b():
    with pytest.raises(DomainError):
        augment_odd_b(GeneratorSet(3, (1, 2, 4, 7)))


def test_augment_rejects_xor_already_a_hop():
    gens = GeneratorSet(3, (1, 2, 3, 7))
    assert bisection_fwht(gens).b == 1
    with pytest.raises(DomainError):
        augment_odd_b(gens)


def test_optimize_secondary_reaches_the_folded_cube():
    start = GeneratorSet(4, (1, 2, 4, 8, 3))
    better = optimize_secondary(start, objective="diameter")
    assert distance_profile(better).diameter == 2
    assert bisection_fwht(better).b >= 1


def test_optimize_secondary_avg_objective():
    start = GeneratorSet(4, (1, 2, 4, 8, 3))
    better = optimize_secondary(start, objective="avg_hops")
    assert distance_profile(better).total < distance_profile(start).total


def test_optimize_secondary_holds_b():
    start = GeneratorSet(3, (1, 2, 4, 7))
    result = optimize_secondary(start, objective="diameter")
    assert bisection_fwht(result).b >= 2


def test_optimize_secondary_local_optimum_is_returned():
    # No single swap can beat diameter 4 at m = 4 on 16 nodes: three
    # hops reach at most 15 nodes in three steps.
    start = hypercube(4)
    assert optimize_secondary(start, objective="diameter") == start


def test_optimize_secondary_budget_and_validation():
    start = GeneratorSet(4, (1, 2, 4, 8, 3))
    assert optimize_secondary(start, budget=0) == start
    with pytest.raises(DomainError):
        optimize_secondary(start, objective="latency")
    with pytest.raises(DomainError):
        optimize_secondary(start, depth=3)
    with pytest.raises(DomainError):
        optimize_secondary(GeneratorSet(3, (1, 2, 3)))


def test_optimize_secondary_depth_two_runs():
    start = GeneratorSet(3, (1, 2, 4))
    result = optimize_secondary(start, objective="diameter", depth=2, budget=500)
    prof = distance_profile(result)
    assert prof.diameter <= 3
