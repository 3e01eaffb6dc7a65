import pytest
from fractions import Fraction
from invgraphs.perms import (
    absolute_length,
    all_perms,
    avoids,
    check_perm,
    contains_pattern,
    cycle_lengths,
    cycles,
    descent_profile,
    expected_descent_stats,
    find_interval,
    format_perm,
    identity,
    inv,
    inverse,
    inversion_list,
    inversion_polynomial,
    is_log_concave,
    is_simple,
    lehmer_decode,
    lehmer_encode,
    lehmer_rank,
    length,
    parse_perm,
    perm_sum,
    symmetry,
    symmetry_class,
)


def test_lehmer_worked_example():
    assert lehmer_encode((3, 7, 1, 6, 8, 2, 5, 4)) == (2, 5, 0, 3, 3, 0, 1, 0)
    assert lehmer_decode((2, 5, 0, 3, 3, 0, 1, 0)) == (3, 7, 1, 6, 8, 2, 5, 4)


def test_lehmer_trivial():
    assert lehmer_encode(identity(5)) == (0, 0, 0, 0, 0)
    assert lehmer_encode((4, 3, 2, 1)) == (3, 2, 1, 0)
    assert lehmer_decode((0, 0, 0)) == (1, 2, 3)


def test_lehmer_bijection_s7():
    # every code yields a distinct permutation and round-trips
    seen = set()
    from itertools import product

    for code in product(*[range(8 - i) for i in range(1, 8)]):
        p = lehmer_decode(code)
        assert lehmer_encode(p) == code
        seen.add(p)
    assert len(seen) == 5040


def test_lehmer_rejects_bad_code():
    with pytest.raises(ValueError):
        lehmer_decode((3, 0, 0))


def test_lehmer_rank_is_lex_order():
    ranked = sorted(all_perms(5), key=lehmer_rank)
    assert ranked == sorted(all_perms(5))
    assert lehmer_rank(identity(5)) == 0


def test_inversions():
    assert inversion_list((2, 4, 1, 3)) == {(1, 3), (2, 3), (2, 4)}
    assert inversion_list(identity(6)) == set()
    assert len(inversion_list((4, 3, 2, 1))) == 6


def test_code_sums_count_inversions():
    for p in all_perms(6):
        assert sum(lehmer_encode(p)) == len(inversion_list(p))


def test_inversion_polynomial_small():
    assert inversion_polynomial(1) == (1,)
    assert inversion_polynomial(3) == (1, 2, 2, 1)


@pytest.mark.parametrize("n", [3, 7])
def test_inversion_polynomial_matches_histogram(n):
    hist = [0] * (n * (n - 1) // 2 + 1)
    for p in all_perms(n):
        hist[inv(p)] += 1
    assert inversion_polynomial(n) == tuple(hist)


def test_inversion_polynomial_log_concave():
    for n in range(3, 11):
        assert is_log_concave(inversion_polynomial(n))


def test_inversion_polynomial_cap():
    with pytest.raises(ValueError):
        inversion_polynomial(13)


def test_symmetries():
    assert symmetry((3, 1, 4, 2), "inverse") == (2, 4, 1, 3)
    assert symmetry((3, 1, 4, 2), "reverse_complement") == (3, 1, 4, 2)
    assert symmetry(identity(4), "inverse") == identity(4)


def test_symmetry_involutions():
    for p in all_perms(5):
        for which in ("reverse", "complement", "reverse_complement"):
            assert symmetry(symmetry(p, which), which) == p
        assert inverse(inverse(p)) == p


def test_symmetry_class_size():
    assert symmetry_class((3, 1, 4, 2)) == {(3, 1, 4, 2), (2, 4, 1, 3)}


def test_sums():
    assert perm_sum((2, 1), perm_sum((2, 1), (2, 1), "direct"), "direct") == (2, 1, 4, 3, 6, 5)
    assert perm_sum((1, 2), (1, 2), "skew") == (3, 4, 1, 2)
    assert perm_sum((1,), (1,), "direct") == (1, 2)


def test_patterns():
    found, witness = contains_pattern((2, 5, 1, 3, 4), (1, 3, 2))
    assert found
    assert [(2, 5, 1, 3, 4)[i - 1] for i in witness] == [2, 5, 3]
    assert avoids((2, 5, 1, 3, 4), (3, 2, 1))
    for p in all_perms(4):
        assert contains_pattern(p, (1,))[0]


def test_descent_profile():
    prof = descent_profile((6, 7, 5, 4, 1, 9, 8, 2, 3))
    assert prof["descent_set"] == {2, 3, 4, 6, 7}
    prof = descent_profile(identity(5))
    assert prof["X_d"] == prof["X_ddd"] == prof["X_ddadd"] == 0


def test_mean_descents_s6():
    total = sum(descent_profile(p)["X_d"] for p in all_perms(6))
    assert Fraction(total, 720) == Fraction(5, 2)


def test_expected_stats_require_n6():
    with pytest.raises(ValueError):
        expected_descent_stats(5)
    stats = expected_descent_stats(6)
    assert stats["E_X_d"] == Fraction(5, 2)


def test_lengths():
    assert absolute_length((3, 4, 2, 1)) == 3
    assert absolute_length((4, 2, 3, 1)) == 1
    assert length(identity(5)) == absolute_length(identity(5)) == 0
    assert cycle_lengths((3, 4, 2, 1)) == [4]
    assert cycles((2, 1, 3)) == [(1, 2), (3,)]


def test_length_equals_absolute_iff_avoids_321_3412():
    # checked against the forest criterion in test_reflect; here the patterns
    for p in all_perms(6):
        boolean = avoids(p, (3, 2, 1)) and avoids(p, (3, 4, 1, 2))
        assert (length(p) == absolute_length(p)) == boolean


def test_find_interval_worked_example():
    assert find_interval((3, 1, 6, 4, 7, 5, 9, 2, 10, 8)) == (3, 6)


def test_simplicity():
    assert is_simple((3, 1, 4, 2))
    assert find_interval((1, 2)) is None and is_simple((1, 2))
    assert not is_simple((1, 2, 3))
    assert find_interval((1, 2, 3)) == (1, 2)


def test_parse_and_format():
    assert parse_perm("31542") == (3, 1, 5, 4, 2)
    assert parse_perm("3,1,5,4,2") == (3, 1, 5, 4, 2)
    eleven = tuple(range(11, 0, -1))
    assert parse_perm(format_perm(eleven)) == eleven
    with pytest.raises(ValueError):
        parse_perm("31541")
    with pytest.raises(ValueError):
        check_perm((0, 1))
