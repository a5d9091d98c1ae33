"""Requirement matching and wiring-table output."""

import io
import random
from fractions import Fraction

import pytest

from longhop import (
    DomainError,
    GeneratorSet,
    SolutionDB,
    WiringTable,
    find_solution,
    make_record,
    wiring_table,
)
from longhop.designer import oversubscription


def test_oversubscription():
    assert oversubscription(6, 3) == Fraction(2)
    assert oversubscription(3, 2) == Fraction(3, 2)
    with pytest.raises(DomainError):
        oversubscription(3, 0)


@pytest.mark.parametrize(
    "ports,radix,d,m",
    [
        (96, 12, 5, 9),
        (1536, 24, 8, 18),
        (655360, 48, 16, 38),
    ],
)
def test_find_solution_reference_requirements(seeded_db, ports, radix, d, m):
    choice = find_solution(seeded_db, ports, radix)
    assert (choice.d, choice.m) == (d, m)
    assert choice.ports == ports
    assert choice.phi == Fraction(1)
    assert choice.score == 0
    assert choice.free_ports == radix - m


def test_find_solution_at_least_ports(seeded_db):
    relaxed = find_solution(seeded_db, 100, 12)
    assert (relaxed.d, relaxed.m) == (5, 9)
    assert relaxed.ports == 96
    strict = find_solution(seeded_db, 100, 12, at_least_ports=True)
    assert strict.ports >= 100
    assert (strict.d, strict.m) == (6, 10)


def test_find_solution_weights_change_the_pick(seeded_db):
    # All weight on the oversubscription error: the first phi = 1
    # record in (d, m) order wins regardless of port count.
    choice = find_solution(
        seeded_db, 96, 12, weights=(Fraction(0), Fraction(1))
    )
    assert (choice.d, choice.m) == (4, 8)
    assert choice.phi == Fraction(1)


def test_find_solution_ties_prefer_smaller_networks():
    db = SolutionDB()
    db.add(make_record(GeneratorSet(3, (1, 2, 4, 7)), "small"))
    db.add(make_record(GeneratorSet(4, (1, 2, 4, 8)), "large"))
    # At radix 8 both offer E=4, so a 48-port target sits exactly
    # between their 32 and 64 achievable ports; pure-ports weights make
    # it a genuine tie and the smaller network must win it.
    choice = find_solution(db, 48, 8, weights=(Fraction(1), Fraction(0)))
    assert choice.record.provenance == "small"


def test_find_solution_validation(seeded_db):
    with pytest.raises(DomainError):
        find_solution(seeded_db, 0, 12)
    with pytest.raises(DomainError):
        find_solution(seeded_db, 96, 1)
    with pytest.raises(DomainError):
        find_solution(seeded_db, 96, 12, phi=Fraction(0))
    with pytest.raises(DomainError):
        find_solution(seeded_db, 96, 12, weights=(Fraction(1), Fraction(1)))
    with pytest.raises(DomainError):
        find_solution(SolutionDB(), 96, 12)
    # Radix 3 leaves no record with free ports: every stored m >= 3.
    with pytest.raises(DomainError):
        find_solution(seeded_db, 96, 3)


def test_wiring_table_golden():
    table = WiringTable(GeneratorSet(3, (1, 2, 4, 7)), radix=6)
    assert table.header() == "Sw/Pt:\t#1\t#2\t#3\t#4\t#5\t#6"
    assert table.line(0) == "0:\t1\t2\t4\t7\t**\t**"
    assert table.line(5) == "5:\t4\t7\t1\t2\t**\t**"


def test_wiring_table_reference_row(seeded_db):
    rec = seeded_db.query(5, 9)
    table = wiring_table(rec, 12)
    assert table.line(5) == (
        "5:\t04\t07\t01\t0D\t15\t0B\t0A\t11\t1C\t**\t**\t**"
    )


def test_wiring_ports_pair_up():
    rng = random.Random(17)
    while True:
        hops = tuple(rng.sample(range(1, 32), 7))
        gens = GeneratorSet(5, hops)
        if gens.spans():
            break
    table = WiringTable(gens, radix=9)
    for v in range(gens.n):
        row = table.row(v)
        for s, peer in enumerate(row):
            assert table.row(peer)[s] == v


def test_wiring_table_write_ranges():
    table = WiringTable(GeneratorSet(3, (1, 2, 4, 7)), radix=5)
    buf = io.StringIO()
    table.write(buf, 2, 3)
    lines = buf.getvalue().splitlines()
    assert lines[0].startswith("Sw/Pt:")
    assert lines[1].startswith("2:")
    assert lines[2].startswith("3:")
    assert len(lines) == 3
    with pytest.raises(DomainError):
        table.write(io.StringIO(), 5, 9)
    with pytest.raises(DomainError):
        table.write(io.StringIO(), 3, 2)


def test_wiring_table_needs_free_ports():
    with pytest.raises(DomainError):
        WiringTable(GeneratorSet(3, (1, 2, 4, 7)), radix=4)
