import random

import pytest

from src.core.collapse import is_uniformly_collapsible
from src.core.combinatorics import BoundBranch, binomial
from src.core.complexes import (
    MonomialIdeal,
    complement_complex,
    complement_ideal,
    gen_compressed_ideal,
    gen_cycle_with_chord,
    gen_veronese,
    normalize_ideal,
    random_pure_ideal,
)
from src.core.errors import InvalidArgument, NotPure
from src.core.poset import build_reduced_poset, is_partitionable, verify_partition
from src.core.sdepth import (
    check_minimal_in_Xi,
    conjectured_bound,
    probe_conjecture,
    stanley_depth,
    theorem_bound,
    verify_main_theorem,
)
from src.utils.bitset import full_set, make_set


def S(*indexes):
    return make_set(indexes)


class TestStanleyDepth:
    """厳密な Stanley depth のテスト"""

    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (4, 2), (5, 3)])
    def test_maximal_ideal(self, n, expected):
        """極大イデアルの sdepth は ⌈n/2⌉"""
        ideal = gen_veronese(n, 1)
        value, witness = stanley_depth(ideal)
        assert value == expected
        assert verify_partition(build_reduced_poset(ideal, value), witness)

    def test_single_variable(self):
        """⟨x1⟩ (n=2) は 2"""
        value, witness = stanley_depth(normalize_ideal([S(1)], 2))
        assert value == 2
        assert witness.intervals == ((S(1), S(1, 2)),)

    def test_unit_ideal(self):
        """単位イデアルは n"""
        value, witness = stanley_depth(MonomialIdeal(n=3, generators=(0,)))
        assert value == 3
        assert witness.intervals == ((0, full_set(3)),)

    def test_full_degree(self):
        """d = n なら n"""
        value, _ = stanley_depth(MonomialIdeal(n=3, generators=(full_set(3),)))
        assert value == 3

    def test_compressed_ideals(self):
        """I_{4,2}^5 は 2、I_{4,2}^4 は 3"""
        assert stanley_depth(gen_compressed_ideal(4, 2, 5))[0] == 2
        assert stanley_depth(gen_compressed_ideal(4, 2, 4))[0] == 3

    @pytest.mark.parametrize("n", [5, 6])
    def test_cycle_with_chord(self, n):
        """弦つき n 角形の補イデアルは d = n-2 で sdepth = d"""
        ideal = complement_ideal(gen_cycle_with_chord(n))
        value, _ = stanley_depth(ideal)
        assert ideal.min_degree == n - 2
        assert value == n - 2

    def test_lower_bound_random(self):
        """sdepth は最小生成次数以上"""
        rng = random.Random(21)
        for _ in range(20):
            n = rng.randint(2, 5)
            d = rng.randint(1, n)
            ideal = random_pure_ideal(n, d, rng.randint(1, binomial(n, d)), rng)
            value, witness = stanley_depth(ideal)
            assert d <= value <= n
            assert verify_partition(build_reduced_poset(ideal, value), witness)


class TestTheoremBound:
    """μ_d の上限 min(binom(n,d+1), ξ_{n-d}) のテスト"""

    def test_examples(self):
        """代表的な値"""
        assert theorem_bound(4, 2) == (4, BoundBranch.XI)
        assert theorem_bound(5, 2) == (10, BoundBranch.BINOM)
        assert theorem_bound(6, 3) == (14, BoundBranch.XI)

    def test_edges(self):
        """d = n と d = 0"""
        assert theorem_bound(4, 4) == (0, BoundBranch.BINOM)
        assert theorem_bound(4, 0) == (4, BoundBranch.BINOM)

    def test_out_of_range(self):
        """d > n はエラー"""
        with pytest.raises(InvalidArgument):
            theorem_bound(3, 4)


class TestVerifyMainTheorem:
    """十分条件 μ_d(I) <= 上限 ⇒ sdepth(I) >= d+1 の検証のテスト"""

    def test_at_bound(self):
        """I_{4,2}^4 は仮定を満たし崩壊できる"""
        report = verify_main_theorem(gen_compressed_ideal(4, 2, 4))
        assert report.hypothesis_met
        assert report.collapsible
        assert report.consistent
        assert report.bound == 4
        assert not report.small_case

    def test_just_above_bound(self):
        """I_{4,2}^5 は仮定を満たさず崩壊もできない"""
        report = verify_main_theorem(gen_compressed_ideal(4, 2, 5))
        assert not report.hypothesis_met
        assert not report.collapsible
        assert report.consistent

    def test_small_case(self):
        """n >= 2d+1 ならどの純なイデアルも崩壊できる"""
        report = verify_main_theorem(gen_veronese(5, 2))
        assert report.small_case
        assert report.hypothesis_met
        assert report.collapsible

    def test_mixed_degree_uses_lowest_part(self):
        """⟨x1, x2x3⟩ は I_1 = ⟨x1⟩ で判定する"""
        report = verify_main_theorem(normalize_ideal([S(1), S(2, 3)], 3))
        assert report.d == 1
        assert report.mu_d == 1
        assert report.bound == 3
        assert report.collapsible

    def test_full_degree(self):
        """d = n は崩壊を調べない"""
        report = verify_main_theorem(MonomialIdeal(n=3, generators=(full_set(3),)))
        assert not report.hypothesis_met
        assert not report.collapsible
        assert report.certificate is None
        assert report.notes

    def test_random_within_bound(self):
        """上限以下の μ_d を持つ無作為なイデアルはすべて崩壊できる"""
        rng = random.Random(81)
        for _ in range(100):
            n = rng.randint(3, 8)
            d = rng.randint(1, n - 1)
            bound, _ = theorem_bound(n, d)
            mu = rng.randint(1, min(bound, binomial(n, d)))
            report = verify_main_theorem(random_pure_ideal(n, d, mu, rng))
            assert report.hypothesis_met
            assert report.collapsible, (n, d, mu)


class TestPurityReduction:
    """sdepth(I) >= d+1 ⇔ sdepth(I_d) >= d+1 のテスト"""

    def test_random_mixed(self):
        """次数の混ざった無作為なイデアルで両辺が一致する"""
        rng = random.Random(5)
        checked = 0
        while checked < 40:
            n = rng.randint(3, 5)
            raw = [make_set(rng.sample(range(1, n + 1), rng.randint(1, n - 1))) for _ in range(rng.randint(2, 5))]
            ideal = normalize_ideal(raw, n)
            d = ideal.min_degree
            if ideal.is_pure:
                continue
            whole, _ = is_partitionable(build_reduced_poset(ideal, d + 1))
            part, _ = is_partitionable(build_reduced_poset(ideal.degree_part(d), d + 1))
            assert whole == part
            checked += 1


class TestRestriction:
    """生成元を減らしても sdepth >= d+1 は保たれる"""

    def test_random_deletions(self):
        """崩壊できるイデアルから生成元を一つ除いても崩壊できる"""
        rng = random.Random(13)
        for _ in range(50):
            n = rng.randint(3, 6)
            d = rng.randint(1, n - 1)
            mu = rng.randint(2, binomial(n, d))
            ideal = random_pure_ideal(n, d, mu, rng)
            if not is_uniformly_collapsible(complement_complex(ideal))[0]:
                continue
            smaller = ideal.without(rng.choice(ideal.generators))
            assert is_uniformly_collapsible(complement_complex(smaller))[0]

    def test_necessary_count(self):
        """sdepth >= d+1 なら μ_d <= binom(n, d+1)"""
        rng = random.Random(34)
        for _ in range(50):
            n = rng.randint(3, 6)
            d = rng.randint(1, n - 1)
            ideal = random_pure_ideal(n, d, rng.randint(1, binomial(n, d)), rng)
            if is_uniformly_collapsible(complement_complex(ideal))[0]:
                assert ideal.mu() <= binomial(n, d + 1)


class TestProbeConjecture:
    """予想下界 d + ⌊binom(n,d+1)/binom(n,d)⌋ との比較のテスト"""

    def test_bound_values(self):
        """下界の値"""
        assert conjectured_bound(5, 2) == 3
        assert conjectured_bound(3, 1) == 2
        assert conjectured_bound(4, 2) == 2

    def test_veronese_row(self):
        """I_{5,2} の sdepth は 3 で下界と一致する"""
        report = probe_conjecture(5, 2)
        row = report.rows[0]
        assert row.sdepth == 3
        assert row.lower_bound == 3
        assert row.equals_upper
        assert report.all_meet_lower

    def test_extra_ideals(self):
        """追加のイデアルは上界なしで並ぶ"""
        extra = [("cycle", complement_ideal(gen_cycle_with_chord(5)))]
        report = probe_conjecture(4, 2, extra)
        assert len(report.rows) == 2
        assert report.rows[1].label == "cycle"
        assert report.rows[1].upper_bound is None
        assert report.rows[1].equals_upper is None
        assert report.rows[1].sdepth == 3

    def test_size_limit(self):
        """n は 8 まで"""
        with pytest.raises(InvalidArgument):
            probe_conjecture(9, 2)


class TestCheckMinimalInXi:
    """Ξ の極小元の判定のテスト"""

    @pytest.mark.parametrize("n", [5, 6])
    def test_cycle_with_chord(self, n):
        """弦つき n 角形の補イデアルは極小"""
        assert check_minimal_in_Xi(complement_ideal(gen_cycle_with_chord(n)))

    def test_threshold_ideal(self):
        """I_{4,2}^5 は極小"""
        assert check_minimal_in_Xi(gen_compressed_ideal(4, 2, 5))

    def test_not_minimal(self):
        """I_{4,2} は極小ではない"""
        assert not check_minimal_in_Xi(gen_veronese(4, 2))

    def test_not_in_xi(self):
        """sdepth >= d+1 のイデアルは Ξ に入らない"""
        assert not check_minimal_in_Xi(gen_compressed_ideal(4, 2, 4))

    def test_not_pure(self):
        """純でなければエラー"""
        with pytest.raises(NotPure):
            check_minimal_in_Xi(normalize_ideal([S(1), S(2, 3)], 3))

    def test_out_of_range(self):
        """n > 2d はエラー"""
        with pytest.raises(InvalidArgument):
            check_minimal_in_Xi(gen_veronese(5, 2))
