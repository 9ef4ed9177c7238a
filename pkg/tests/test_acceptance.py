"""
受け入れ条件のテスト

重いものは slow マーカー付き（`pytest -m "not slow"` で除外できる）。
"""

import random

import pytest

from src.core.collapse import (
    CertificateKind,
    interval_partition_from_sdr,
    is_uniformly_collapsible,
    verify_certificate,
)
from src.core.combinatorics import BoundBranch, binomial, min_bound, shadow_size, verify_key_lemma, xi
from src.core.complexes import (
    complement_complex,
    complement_ideal,
    compressed_family,
    f_vector,
    family_shadow,
    gen_compressed_ideal,
    gen_cycle_with_chord,
    gen_padded_counterexample,
    gen_veronese,
    normalize_ideal,
    random_pure_ideal,
    random_uniform_family,
)
from src.core.poset import build_reduced_poset, is_partitionable, verify_partition
from src.core.sdepth import check_minimal_in_Xi, stanley_depth, theorem_bound
from src.utils.bitset import full_set, subsets_of_size


def _check_equivalence(ideal):
    d = ideal.min_degree
    complex_ = complement_complex(ideal)
    collapsible, certificate = is_uniformly_collapsible(complex_)
    poset = build_reduced_poset(ideal, d + 1)
    partitionable, partition = is_partitionable(poset)
    assert collapsible == partitionable, [bin(g) for g in ideal.generators]
    assert verify_certificate(complex_, certificate)
    if partitionable:
        assert verify_partition(poset, partition)
        assert verify_partition(poset, interval_partition_from_sdr(ideal, certificate))


def _all_two_subset_ideals(n):
    edges = subsets_of_size(full_set(n), 2)
    for family in range(1, 1 << len(edges)):
        yield normalize_ideal([e for i, e in enumerate(edges) if family >> i & 1], n)


class TestMaximalIdeal:
    """極大イデアルの sdepth"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_ceiling_half(self, n):
        """sdepth⟨x1..xn⟩ = ⌈n/2⌉"""
        value, _ = stanley_depth(gen_veronese(n, 1))
        assert value == (n + 1) // 2


class TestOptimalityPair:
    """δ=2, n=4 での上限の鋭さ"""

    def test_at_bound(self):
        """I_{4,2}^4 は崩壊でき sdepth 3"""
        ideal = gen_compressed_ideal(4, 2, 4)
        assert is_uniformly_collapsible(complement_complex(ideal))[0]
        assert stanley_depth(ideal)[0] == 3

    def test_above_bound(self):
        """I_{4,2}^5 は崩壊できず sdepth 2"""
        ideal = gen_compressed_ideal(4, 2, 5)
        assert not is_uniformly_collapsible(complement_complex(ideal))[0]
        assert stanley_depth(ideal)[0] == 2


class TestKeyLemmaAndBound:
    """ξ と min_bound の表"""

    def test_key_lemma(self):
        """k = 1..6"""
        assert all(verify_key_lemma(k).passed for k in range(1, 7))

    def test_min_bound_table(self):
        """1 <= δ < n <= 20 で場合分けと一致"""
        for n in range(2, 21):
            for delta in range(1, n):
                expected = (xi(delta), BoundBranch.XI) if n >= 2 * delta else (
                    binomial(n, delta - 1), BoundBranch.BINOM
                )
                assert min_bound(n, delta) == expected


class TestPaddedCounterexample:
    """f_1 >= f_2 でも崩壊できない複体"""

    def test_padded(self):
        """f_2 = ξ_3+2, f_1 = ξ_3+3、違反集合は検証を通る"""
        complex_ = gen_padded_counterexample(6, 3)
        fv = f_vector(complex_)
        assert fv.f(2) == xi(3) + 2
        assert fv.f(1) == xi(3) + 3
        ok, certificate = is_uniformly_collapsible(complex_)
        assert not ok
        assert certificate.kind == CertificateKind.VIOLATOR
        assert verify_certificate(complex_, certificate)


class TestSmallestDegree:
    """弦つき n 角形の補イデアル"""

    @pytest.mark.parametrize("n", [5, 6])
    def test_cycle_with_chord(self, n):
        """sdepth = n-2、μ = n+1、Ξ の極小元"""
        ideal = complement_ideal(gen_cycle_with_chord(n))
        assert stanley_depth(ideal)[0] == n - 2
        assert ideal.mu() == n + 1
        assert check_minimal_in_Xi(ideal)


class TestEquivalenceOracle:
    """一様崩壊可能性と区間分割可能性の一致"""

    @pytest.mark.parametrize("n", [3, 4])
    def test_all_two_subset_ideals(self, n):
        """n <= 4 の d=2 の純なイデアルすべて"""
        for ideal in _all_two_subset_ideals(n):
            _check_equivalence(ideal)

    @pytest.mark.slow
    def test_all_two_subset_ideals_on_five(self):
        """n = 5 の d=2 の純なイデアルすべて"""
        for ideal in _all_two_subset_ideals(5):
            _check_equivalence(ideal)

    @pytest.mark.slow
    def test_random_ideals(self):
        """n <= 7 の無作為な純なイデアル 500 個"""
        rng = random.Random(500)
        for _ in range(500):
            n = rng.randint(2, 7)
            d = rng.randint(1, n - 1)
            _check_equivalence(random_pure_ideal(n, d, rng.randint(1, binomial(n, d)), rng))

    def test_random_ideals_quick(self):
        """n <= 6 の無作為な純なイデアル 60 個"""
        rng = random.Random(60)
        for _ in range(60):
            n = rng.randint(2, 6)
            d = rng.randint(1, n - 1)
            _check_equivalence(random_pure_ideal(n, d, rng.randint(1, binomial(n, d)), rng))


class TestMainTheoremProperty:
    """μ_d <= 上限なら崩壊できる"""

    @pytest.mark.slow
    def test_random_within_bound(self):
        """n <= 8 の無作為なイデアル 1000 個"""
        rng = random.Random(1000)
        for _ in range(1000):
            n = rng.randint(2, 8)
            d = rng.randint(1, n - 1)
            bound, _ = theorem_bound(n, d)
            ideal = random_pure_ideal(n, d, rng.randint(1, min(bound, binomial(n, d))), rng)
            ok, certificate = is_uniformly_collapsible(complement_complex(ideal))
            assert ok
            assert verify_certificate(complement_complex(ideal), certificate)

    def test_small_case(self):
        """n >= 2d+1 ならどの純なイデアルも崩壊できる"""
        rng = random.Random(2)
        for _ in range(200):
            n = rng.randint(3, 8)
            d = rng.randint(1, (n - 1) // 2)
            ideal = random_pure_ideal(n, d, rng.randint(1, binomial(n, d)), rng)
            ok, certificate = is_uniformly_collapsible(complement_complex(ideal))
            assert ok
            assert verify_certificate(complement_complex(ideal), certificate)


class TestKruskalKatona:
    """圧縮族の影"""

    @pytest.mark.slow
    def test_compressed_shadows(self):
        """n <= 9 のすべての圧縮族"""
        for n in range(1, 10):
            for k in range(1, n + 1):
                for l in range(1, binomial(n, k) + 1):
                    shadow = family_shadow(compressed_family(n, k, l))
                    assert len(shadow) == shadow_size(l, k)
                    if k >= 2:
                        assert shadow == compressed_family(n, k - 1, len(shadow))

    @pytest.mark.slow
    def test_random_families(self):
        """無作為な一様族 1000 個"""
        rng = random.Random(9)
        for _ in range(1000):
            n = rng.randint(1, 9)
            k = rng.randint(1, n)
            count = rng.randint(1, binomial(n, k))
            family = random_uniform_family(n, k, count, rng)
            assert len(family_shadow(family)) >= shadow_size(count, k)
