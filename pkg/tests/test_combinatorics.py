import random
from itertools import product

import pytest

from src.core.combinatorics import (
    BoundBranch,
    Ordering,
    binomial,
    catalan,
    compare_by_macaulay,
    macaulay_rep,
    min_bound,
    path_count,
    shadow_size,
    telescoping_difference,
    verify_key_lemma,
    xi,
)
from src.core.errors import ArithmeticOverflow, InvalidArgument


class TestBinomial:
    """二項係数のテスト"""

    def test_small_values(self):
        """小さな値"""
        assert binomial(0, 0) == 1
        assert binomial(4, 2) == 6
        assert binomial(7, 4) == 35

    def test_k_greater_than_n(self):
        """k > n なら 0"""
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_negative_n(self):
        """負の n はエラー"""
        with pytest.raises(InvalidArgument):
            binomial(-1, 0)

    def test_overflow(self):
        """64ビットを超えるとエラー"""
        assert binomial(64, 32) == 1832624140942590534
        with pytest.raises(ArithmeticOverflow):
            binomial(70, 35)


class TestMacaulayRep:
    """Macaulay 表現のテスト"""

    def test_five_in_degree_two(self):
        """5 = C(3,2) + C(2,1)"""
        rep = macaulay_rep(5, 2)
        assert rep.coeffs == (3, 2)
        assert rep.lowest == 1
        assert str(rep) == "C(3,2)+C(2,1)"

    def test_one_is_single_top_term(self):
        """1 = C(k,k)、残りは a_j = j-1 で埋まる"""
        rep = macaulay_rep(1, 3)
        assert rep.coeffs == (3, 1, 0)
        assert rep.terms() == [(3, 3)]

    def test_binomial_leading_coefficient(self):
        """binom(n, δ-1) の表現は (n, δ-3, ..., 0)"""
        rep = macaulay_rep(binomial(6, 3), 3)
        assert rep.coeffs == (6, 1, 0)

    def test_invalid_arguments(self):
        """x < 1 や k < 1 はエラー"""
        with pytest.raises(InvalidArgument):
            macaulay_rep(0, 2)
        with pytest.raises(InvalidArgument):
            macaulay_rep(3, 0)

    def test_reconstruction_exhaustive(self):
        """x <= 2000, k <= 8 で値が復元でき、係数が狭義減少する"""
        for k in range(1, 9):
            for x in range(1, 2001):
                rep = macaulay_rep(x, k)
                assert rep.value() == x
                tops = [a for a, _ in rep.terms()]
                assert all(a > b for a, b in zip(tops, tops[1:]))
                assert rep.coefficient(rep.lowest) >= rep.lowest
                assert all(rep.coefficient(j) == j - 1 for j in range(1, rep.lowest))

    def test_reconstruction_random(self):
        """10^5 までの無作為な x で値が復元できる"""
        rng = random.Random(427)
        for _ in range(300):
            x, k = rng.randint(1, 10**5), rng.randint(1, 8)
            assert macaulay_rep(x, k).value() == x


class TestShadowSize:
    """影の大きさ ∂_{k-1} のテスト"""

    def test_five_in_degree_two(self):
        """∂_1(5) = 3 + 1"""
        assert shadow_size(5, 2) == 4

    def test_degree_one_is_empty_face(self):
        """∂_0(x) = 1"""
        assert shadow_size(1, 1) == 1
        assert shadow_size(7, 1) == 1

    def test_threshold_is_sharp(self):
        """∂_{δ-1}(ξ_δ + 1) = ξ_δ"""
        for delta in range(2, 7):
            assert shadow_size(xi(delta) + 1, delta) == xi(delta)

    def test_full_family(self):
        """binom(m,k) 個の影は binom(m,k-1) 個"""
        for m in range(2, 9):
            for k in range(1, m + 1):
                assert shadow_size(binomial(m, k), k) == binomial(m, k - 1)

    def test_monotone(self):
        """∂_{k-1} は単調非減少"""
        for k in range(1, 7):
            values = [shadow_size(x, k) for x in range(1, 1500)]
            assert all(a <= b for a, b in zip(values, values[1:]))


class TestXiAndBound:
    """ξ_δ と min_bound のテスト"""

    def test_xi_values(self):
        """ξ_1, ξ_2, ξ_3, ξ_4"""
        assert [xi(d) for d in range(1, 5)] == [1, 4, 14, 49]

    def test_xi_invalid(self):
        """δ < 1 はエラー"""
        with pytest.raises(InvalidArgument):
            xi(0)

    def test_min_bound_examples(self):
        """代表的な値と分岐"""
        assert min_bound(6, 3) == (14, BoundBranch.XI)
        assert min_bound(5, 3) == (10, BoundBranch.BINOM)
        assert min_bound(4, 2) == (4, BoundBranch.XI)

    def test_min_bound_case_split(self):
        """n >= 2δ なら ξ_δ、n <= 2δ-1 なら binom(n, δ-1)"""
        for n in range(2, 21):
            for delta in range(1, n):
                value, branch = min_bound(n, delta)
                assert value == min(xi(delta), binomial(n, delta - 1))
                if n >= 2 * delta:
                    assert (value, branch) == (xi(delta), BoundBranch.XI)
                else:
                    assert (value, branch) == (binomial(n, delta - 1), BoundBranch.BINOM)

    def test_min_bound_range(self):
        """δ >= n はエラー"""
        with pytest.raises(InvalidArgument):
            min_bound(4, 4)


class TestCompareByMacaulay:
    """係数列の辞書式比較のテスト"""

    def test_examples(self):
        """大小と等号"""
        assert compare_by_macaulay(5, 4, 2) == Ordering.GREATER
        assert compare_by_macaulay(14, 10, 2) == Ordering.GREATER
        assert compare_by_macaulay(10, 14, 2) == Ordering.LESS
        assert compare_by_macaulay(9, 9, 3) == Ordering.EQUAL

    def test_tuples_follow_integer_order(self):
        """x <= 5000 で埋め込み済み係数列は x とともに狭義増加する"""
        for k in range(1, 7):
            previous = macaulay_rep(1, k).coeffs
            for x in range(2, 5001):
                current = macaulay_rep(x, k).coeffs
                assert current > previous
                previous = current

    def test_random_pairs(self):
        """無作為な組で整数の大小と一致する"""
        rng = random.Random(6)
        expected = {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}
        for _ in range(500):
            x, y, k = rng.randint(1, 5000), rng.randint(1, 5000), rng.randint(1, 6)
            assert compare_by_macaulay(x, y, k) == expected[(x > y) - (x < y)]


def _brute_paths(start: int, steps: int, end: int) -> int:
    count = 0
    for moves in product((1, -1), repeat=steps):
        height = start
        ok = height > 0
        for move in moves:
            height += move
            if height <= 0:
                ok = False
                break
        if ok and height == end:
            count += 1
    return count


class TestPathCount:
    """反射原理による格子路の数え上げのテスト"""

    def test_examples(self):
        """(1,4,1) は 2 通り、長さ 0 は 1 通り"""
        assert path_count(1, 4, 1) == 2
        assert path_count(1, 0, 1) == 1

    def test_parity_mismatch(self):
        """偶奇が合わなければ 0"""
        assert path_count(1, 3, 1) == 0

    def test_catalan_shift(self):
        """(0,0) から (2n,0) へ途中で軸に触れない路は C_{n-1} 通り"""
        for n in range(1, 9):
            assert path_count(1, 2 * n - 2, 1) == catalan(n - 1)

    def test_against_brute_force(self):
        """12歩までの全列挙と一致する"""
        for steps in range(0, 13):
            for start in range(0, 7):
                for end in range(0, 7):
                    assert path_count(start, steps, end) == _brute_paths(start, steps, end)

    def test_negative_arguments(self):
        """負の引数はエラー"""
        with pytest.raises(InvalidArgument):
            path_count(-1, 2, 1)


class TestCatalan:
    """Catalan 数のテスト"""

    def test_values(self):
        """C_0, C_3, C_5"""
        assert catalan(0) == 1
        assert catalan(3) == 5
        assert catalan(5) == 42

    def test_recurrence(self):
        """C_{n+1} = Σ C_i C_{n-i}"""
        values = [catalan(n) for n in range(12)]
        for n in range(11):
            assert values[n + 1] == sum(values[i] * values[n - i] for i in range(n + 1))

    def test_matches_paths(self):
        """C_n = path_count(1, 2n, 1)"""
        for n in range(0, 11):
            assert catalan(n) == path_count(1, 2 * n, 1)


class TestKeyLemma:
    """x <= ξ_k ⇒ ∂_{k-1}(x) >= x の検証のテスト"""

    def test_passes_up_to_six(self):
        """k = 1..6 で合格する"""
        for k in range(1, 7):
            report = verify_key_lemma(k)
            assert report.passed, report.notes
            assert report.checked == xi(k)
            assert report.sharpness_value == xi(k)

    def test_degree_three(self):
        """k = 3 では 14 個を確認し、∂_2(15) = 14"""
        report = verify_key_lemma(3)
        assert report.checked == 14
        assert report.sharpness_value == 14

    def test_telescoping(self):
        """望遠鏡和は 1"""
        assert telescoping_difference(4) == 1
        assert all(telescoping_difference(k) == 1 for k in range(1, 10))

    def test_invalid(self):
        """k < 1 はエラー"""
        with pytest.raises(InvalidArgument):
            verify_key_lemma(0)
