"""Code/hop translation, the weight/bisection identity, and equivalence maps."""

import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracle
from longhop import (
    DomainError,
    EquivalenceMap,
    FormatError,
    GeneratorSet,
    LinearCode,
    apply_equivalence,
    bisection_fwht,
    code_to_hops,
    codewords,
    cut_counts,
    diagonalize,
    distance_profile,
    hops_to_code,
    min_weight,
    verify_duality,
)
from longhop.ecc import (
    MinChangeResult,
    format_code,
    load_code,
    min_change_expansion,
    parse_code,
    save_code,
)

# A [7,4] single-error-correcting generator matrix and its hop form.
CODE74 = LinearCode(7, (0b1101000, 0b0110100, 0b1110010, 0b1010001))
HOPS74 = (1, 2, 4, 8, 7, 0xE, 0xB)

# A [4,3] single-parity code; its hop form is the folded three-cube.
CODE43 = LinearCode(4, (0b1100, 0b1010, 0b1001))


@st.composite
def spanning_sets(draw, max_d=6):
    d = draw(st.integers(2, max_d))
    n = 1 << d
    m = draw(st.integers(d, min(n - 1, d + 4)))
    hops = draw(
        st.lists(st.integers(1, n - 1), min_size=m, max_size=m, unique=True)
    )
    gens = GeneratorSet(d, tuple(hops))
    assume(gens.spans())
    return gens


def test_linear_code_validation():
    with pytest.raises(DomainError):
        LinearCode(0, (1,))
    with pytest.raises(DomainError):
        LinearCode(64, (1,))
    with pytest.raises(DomainError):
        LinearCode(3, ())
    with pytest.raises(DomainError):
        LinearCode(3, (8,))


def test_column_reads_top_down():
    assert [CODE74.column(j) for j in range(7)] == [
        0b1011, 0b1110, 0b0111, 0b1000, 0b0100, 0b0010, 0b0001,
    ]


def test_format_code_golden():
    assert format_code(CODE43) == "1100\n1010\n1001\n"


def test_parse_code_round_trip():
    assert parse_code(format_code(CODE74)) == CODE74
    text = "# generator\n1100\n\n1010  # middle\n1001\n"
    assert parse_code(text) == CODE43


@pytest.mark.parametrize(
    "text",
    ["", "# nothing\n", "110\n1010\n", "10a0\n", "120\n"],
)
def test_parse_code_rejects(text):
    with pytest.raises(FormatError):
        parse_code(text)


def test_save_load_code(tmp_path):
    path = tmp_path / "gen.code"
    save_code(CODE74, path)
    assert load_code(path) == CODE74


def test_code_to_hops_goldens():
    assert code_to_hops(CODE74).hops == HOPS74
    assert code_to_hops(CODE43).hops == (1, 2, 4, 7)


def test_code_to_hops_rejects_degenerate():
    with pytest.raises(DomainError):
        code_to_hops(LinearCode(3, (0b110, 0b011, 0b101)))  # dependent rows
    with pytest.raises(DomainError):
        code_to_hops(LinearCode(4, (0b1100, 0b0110, 0b0010)))  # zero column
    with pytest.raises(DomainError):
        code_to_hops(LinearCode(4, (0b1110, 0b0110, 0b0001)))  # equal columns


def test_hops_to_code_golden():
    code = hops_to_code(GeneratorSet(4, HOPS74))
    assert code == CODE74


def test_hops_to_code_needs_span():
    with pytest.raises(DomainError):
        hops_to_code(GeneratorSet(3, (1, 2, 3)))


@given(spanning_sets())
def test_translation_round_trip(gens):
    assert code_to_hops(hops_to_code(gens)) == gens


def test_codewords_and_min_weight():
    words = sorted(codewords(CODE43).tolist())
    assert words == sorted(oracle.codewords(CODE43.rows))
    assert min_weight(CODE74) == 3
    assert min_weight(CODE43) == 2
    with pytest.raises(DomainError):
        min_weight(LinearCode(3, (0,)))


def test_min_weight_matches_oracle():
    rng = random.Random(3)
    for _ in range(10):
        rows = tuple(rng.randint(1, 255) for _ in range(4))
        if oracle.gf2_rank(rows) == 0:
            continue
        code = LinearCode(8, rows)
        assert min_weight(code) == oracle.min_weight(rows)


def test_min_weight_equals_bisection():
    assert verify_duality(CODE74)
    assert verify_duality(CODE43)


@given(spanning_sets(max_d=5))
def test_duality_holds_on_random_sets(gens):
    assert verify_duality(hops_to_code(gens))


def test_equivalence_map_validation():
    with pytest.raises(DomainError):
        EquivalenceMap(3, (1, 2, 3))
    with pytest.raises(DomainError):
        EquivalenceMap(3, (1, 2))
    with pytest.raises(DomainError):
        EquivalenceMap(3, (1, 2, 8))


def test_equivalence_map_identity_and_apply():
    ident = EquivalenceMap.identity(3)
    assert ident.rows == (1, 2, 4)
    assert [ident.apply(x) for x in range(8)] == list(range(8))
    swap = EquivalenceMap(3, (2, 1, 4))
    assert swap.apply(0b001) == 0b010
    assert swap.apply(0b101) == 0b110


# Unit-triangular, hence invertible.
LINEAR_MAP = EquivalenceMap(8, (1, 3, 4, 8, 16, 48, 64, 192))


@given(st.integers(0, 255), st.integers(0, 255))
def test_equivalence_map_is_linear(x, y):
    assert LINEAR_MAP.apply(x ^ y) == LINEAR_MAP.apply(x) ^ LINEAR_MAP.apply(y)


def test_equivalence_map_compose_and_invert():
    rng = random.Random(8)
    for _ in range(10):
        d = rng.randint(2, 6)
        from longhop import gf2

        emap = EquivalenceMap(d, tuple(gf2.random_invertible(d, rng)))
        ident = emap.then(emap.inverse())
        assert ident.rows == EquivalenceMap.identity(d).rows
    with pytest.raises(DomainError):
        EquivalenceMap.identity(3).then(EquivalenceMap.identity(4))


def test_apply_equivalence_preserves_invariants():
    rng = random.Random(15)
    from longhop import gf2

    for gens in (GeneratorSet(4, (1, 2, 4, 8, 15)), GeneratorSet(4, HOPS74)):
        base = bisection_fwht(gens)
        base_hist = distance_profile(gens).histogram()
        for _ in range(10):
            emap = EquivalenceMap(4, tuple(gf2.random_invertible(4, rng)))
            moved = apply_equivalence(gens, emap)
            assert bisection_fwht(moved).b == base.b
            assert sorted(cut_counts(moved).tolist()) == sorted(
                base.counts.tolist()
            )
            assert distance_profile(moved).histogram() == base_hist


def test_apply_equivalence_dimension_mismatch():
    with pytest.raises(DomainError):
        apply_equivalence(GeneratorSet(3, (1, 2, 4)), EquivalenceMap.identity(4))


def test_diagonalize_systematic_form():
    rng = random.Random(23)
    for _ in range(10):
        d = rng.choice([3, 4, 5])
        n = 1 << d
        while True:
            hops = tuple(rng.sample(range(1, n), rng.randint(d, d + 3)))
            gens = GeneratorSet(d, hops)
            if gens.spans():
                break
        normal, emap = diagonalize(gens)
        assert normal.hops[:d] == tuple(1 << i for i in range(d))
        assert sorted(emap.apply(h) for h in gens.hops) == sorted(normal.hops)
        assert bisection_fwht(normal).b == bisection_fwht(gens).b


def test_diagonalize_keeps_systematic_sets():
    gens = GeneratorSet(4, HOPS74)
    normal, emap = diagonalize(gens)
    assert normal == gens
    assert emap.rows == EquivalenceMap.identity(4).rows


def test_diagonalize_needs_span():
    with pytest.raises(DomainError):
        diagonalize(GeneratorSet(3, (1, 2, 3)))


def test_min_change_finds_a_pure_relabeling():
    old = GeneratorSet(4, (1, 2, 4, 8, 15))
    twist = EquivalenceMap(4, (3, 2, 4, 8))
    new = apply_equivalence(old, twist)
    result = min_change_expansion(old, new, seed=1)
    assert isinstance(result, MinChangeResult)
    assert result.rewired == 0
    assert result.gens.hops == old.hops
    assert result.emap.apply_to(new) == result.gens


def test_min_change_expansion_across_dimensions():
    old = GeneratorSet(3, (1, 2, 4))
    new = GeneratorSet(4, (1, 2, 4, 8, 15))
    result = min_change_expansion(old, new, seed=2)
    # Anything spanning d=4 must use at least one hop outside the old span.
    assert 1 <= result.rewired <= 2
    assert result.gens == result.emap.apply_to(new)
    with pytest.raises(DomainError):
        min_change_expansion(new, old)


def test_min_change_respects_budget():
    old = GeneratorSet(3, (1, 2, 4))
    new = GeneratorSet(3, (3, 5, 6, 7))
    result = min_change_expansion(old, new, budget=1, seed=0)
    assert result.rewired >= 0
