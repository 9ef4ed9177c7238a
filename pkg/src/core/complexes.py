"""
平方自由単項式イデアルと単体複体

イデアルは極小生成系（反鎖）として、単体複体は facet の反鎖として保持する。
補複体 Δ^∁(I) = ⟨[n] ∖ m : m ∈ G(I)⟩ による双対性、rev-lex 順序、
圧縮族 C_{n,k}^l、境界の例となる複体・イデアルの生成器を提供する。
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.combinatorics import binomial, xi
from src.core.errors import InvalidArgument
from src.utils.bitset import (
    MAX_VERTICES,
    VertexSet,
    full_set,
    is_subset,
    make_set,
    members,
    next_same_size,
    size,
    sort_key,
    submasks,
    subsets_of_size,
    within,
)

logger = logging.getLogger(__name__)


def _check_ground(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise InvalidArgument(f"頂点数 n は 1 以上 {MAX_VERTICES} 以下です (n={n})")


def _check_sets(sets: Iterable[VertexSet], n: int) -> None:
    for s in sets:
        if s < 0 or not within(s, n):
            raise InvalidArgument(f"集合 {members(s)} が [{n}] に含まれません")


def _minimal_antichain(sets: Iterable[VertexSet]) -> Tuple[VertexSet, ...]:
    """重複と、他の元を含む元を取り除く"""
    ordered = sorted(set(sets), key=sort_key)
    kept: List[VertexSet] = []
    for s in ordered:
        if not any(is_subset(g, s) for g in kept):
            kept.append(s)
    return tuple(kept)


def _maximal_antichain(sets: Iterable[VertexSet]) -> Tuple[VertexSet, ...]:
    """重複と、他の元に含まれる元を取り除く"""
    ordered = sorted(set(sets), key=sort_key, reverse=True)
    kept: List[VertexSet] = []
    for s in ordered:
        if not any(is_subset(s, f) for f in kept):
            kept.append(s)
    return tuple(sorted(kept, key=sort_key))


@dataclass(frozen=True)
class MonomialIdeal:
    """平方自由単項式イデアル。generators は極小生成系 G(I)"""

    n: int
    generators: Tuple[VertexSet, ...]

    @property
    def min_degree(self) -> int:
        return min(size(g) for g in self.generators)

    @property
    def degrees(self) -> List[int]:
        return sorted({size(g) for g in self.generators})

    @property
    def is_pure(self) -> bool:
        return len(self.degrees) == 1

    @property
    def is_unit(self) -> bool:
        return self.generators == (0,)

    def mu(self, d: Optional[int] = None) -> int:
        """μ(I)、または次数 d の極小生成元の個数 μ_d(I)"""
        if d is None:
            return len(self.generators)
        return sum(1 for g in self.generators if size(g) == d)

    def degree_part(self, d: int) -> "MonomialIdeal":
        """次数 d の生成元だけで生成される部分イデアル I_d"""
        part = tuple(g for g in self.generators if size(g) == d)
        if not part:
            raise InvalidArgument(f"次数 {d} の生成元がありません")
        return MonomialIdeal(n=self.n, generators=part)

    def contains(self, face: VertexSet) -> bool:
        return any(is_subset(g, face) for g in self.generators)

    def without(self, generator: VertexSet) -> "MonomialIdeal":
        rest = tuple(g for g in self.generators if g != generator)
        if not rest:
            raise InvalidArgument("生成元をすべて取り除くことはできません")
        return MonomialIdeal(n=self.n, generators=rest)


@dataclass(frozen=True)
class SimplicialComplex:
    """単体複体。facets は包含について極大な面の反鎖"""

    n: int
    facets: Tuple[VertexSet, ...]

    @property
    def facet_sizes(self) -> List[int]:
        return sorted({size(f) for f in self.facets})

    @property
    def is_pure(self) -> bool:
        return len(self.facet_sizes) == 1

    @property
    def dimension(self) -> int:
        return max(size(f) for f in self.facets) - 1

    def remove_facet(self, facet: VertexSet) -> "SimplicialComplex":
        rest = tuple(f for f in self.facets if f != facet)
        if not rest:
            raise InvalidArgument("facet をすべて取り除くことはできません")
        return SimplicialComplex(n=self.n, facets=rest)


@dataclass(frozen=True)
class FVector:
    """f ベクトル。entries[0] が f_{-1}"""

    entries: Tuple[int, ...]

    def f(self, i: int) -> int:
        idx = i + 1
        if 0 <= idx < len(self.entries):
            return self.entries[idx]
        return 0

    @property
    def dimension(self) -> int:
        return len(self.entries) - 2

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def normalize_ideal(raw_generators: Sequence[VertexSet], n: int) -> MonomialIdeal:
    _check_ground(n)
    _check_sets(raw_generators, n)
    if not raw_generators:
        raise InvalidArgument("生成元が空です（零イデアルは扱いません）")
    return MonomialIdeal(n=n, generators=_minimal_antichain(raw_generators))


def make_complex(raw_facets: Sequence[VertexSet], n: int) -> SimplicialComplex:
    _check_ground(n)
    _check_sets(raw_facets, n)
    if not raw_facets:
        raise InvalidArgument("facet が空です")
    facets = _maximal_antichain(raw_facets)
    if len(facets) != len(set(raw_facets)):
        logger.warning("facet の一覧が反鎖ではないため、極大な面だけを残しました")
    return SimplicialComplex(n=n, facets=facets)


def complement_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    full = full_set(ideal.n)
    facets = tuple(sorted((full ^ g for g in ideal.generators), key=sort_key))
    return SimplicialComplex(n=ideal.n, facets=facets)


def complement_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    full = full_set(complex_.n)
    generators = tuple(sorted((full ^ f for f in complex_.facets), key=sort_key))
    return MonomialIdeal(n=complex_.n, generators=generators)


def f_vector(complex_: SimplicialComplex) -> FVector:
    """すべての面を列挙して数える"""
    faces = set()
    for facet in complex_.facets:
        faces.update(submasks(facet))
    counts: Dict[int, int] = {}
    for face in faces:
        counts[size(face)] = counts.get(size(face), 0) + 1
    top = max(counts)
    return FVector(entries=tuple(counts.get(s, 0) for s in range(top + 1)))


def rev_lex_less(s: VertexSet, t: VertexSet) -> bool:
    """S <_rlex T：ある q で i_q < j_q かつ p > q では i_p = j_p"""
    if size(s) != size(t):
        raise InvalidArgument("rev_lex_less: 同じ大きさの集合どうしでのみ比較できます")
    for i, j in zip(reversed(members(s)), reversed(members(t))):
        if i != j:
            return i < j
    return False


def compressed_family(n: int, k: int, l: int) -> List[VertexSet]:
    """[n] の k 元部分集合のうち rev-lex で最初の l 個"""
    _check_ground(n)
    if not 1 <= k <= n:
        raise InvalidArgument(f"compressed_family: 1 <= k <= n が必要です (n={n}, k={k})")
    total = binomial(n, k)
    if not 1 <= l <= total:
        raise InvalidArgument(f"compressed_family: 1 <= l <= {total} が必要です (l={l})")
    family = []
    current = full_set(k)
    for _ in range(l):
        family.append(current)
        current = next_same_size(current)
    return family


def family_shadow(family: Sequence[VertexSet]) -> List[VertexSet]:
    """∂C = {S : |S| = k-1, ある T ∈ C で S ⊂ T}"""
    sizes = {size(t) for t in family}
    if len(sizes) > 1:
        raise InvalidArgument("family_shadow: 大きさの異なる集合が混在しています")
    if sizes == {0}:
        raise InvalidArgument("family_shadow: 空集合の影は定義しません")
    shadow = set()
    for t in family:
        for v in members(t):
            shadow.add(t & ~(1 << v))
    return sorted(shadow)


def gen_veronese(n: int, d: int) -> MonomialIdeal:
    """平方自由 Veronese イデアル I_{n,d}"""
    _check_ground(n)
    if not 1 <= d <= n:
        raise InvalidArgument(f"gen_veronese: 1 <= d <= n が必要です (n={n}, d={d})")
    return MonomialIdeal(n=n, generators=tuple(compressed_family(n, d, binomial(n, d))))


def gen_compressed_ideal(n: int, d: int, l: int) -> MonomialIdeal:
    """I_{n,d}^l：Δ_l^{n,n-d} の補イデアル"""
    _check_ground(n)
    if not 1 <= d < n:
        raise InvalidArgument(f"gen_compressed_ideal: 1 <= d < n が必要です (n={n}, d={d})")
    family = compressed_family(n, n - d, l)
    return complement_ideal(SimplicialComplex(n=n, facets=tuple(family)))


def gen_not_uc(n: int, delta: int) -> SimplicialComplex:
    """Δ_{ξ_δ+1}^{n,δ}：一様に潰せない複体"""
    _check_ground(n)
    if not 1 <= delta <= n:
        raise InvalidArgument(f"gen_not_uc: 1 <= δ <= n が必要です (n={n}, δ={delta})")
    count = xi(delta) + 1
    if count > binomial(n, delta):
        raise InvalidArgument(
            f"gen_not_uc: ξ_{delta}+1 = {count} が binom({n},{delta}) を超えます"
        )
    logger.info("Δ_{ξ+1}^{n,δ} を生成: n=%d δ=%d facets=%d", n, delta, count)
    return SimplicialComplex(n=n, facets=tuple(compressed_family(n, delta, count)))


def gen_padded_counterexample(n: int, delta: int) -> SimplicialComplex:
    """Δ̃ = ⟨Δ_{ξ_δ+1}^{n,δ}, {n, ..., n+δ-1}⟩（頂点集合 [n+δ-1]）"""
    base = gen_not_uc(n, delta)
    ground = n + delta - 1
    _check_ground(ground)
    extra = make_set(range(n, n + delta))
    return SimplicialComplex(n=ground, facets=base.facets + (extra,))


def gen_cycle_with_chord(n: int) -> SimplicialComplex:
    """n 角形 1-2-...-n-1 に弦 {1,3} を加えたグラフ"""
    if n < 4:
        raise InvalidArgument(f"gen_cycle_with_chord: n >= 4 が必要です (n={n})")
    _check_ground(n)
    edges = [make_set((i, i + 1)) for i in range(1, n)]
    edges.append(make_set((1, n)))
    edges.append(make_set((1, 3)))
    return SimplicialComplex(n=n, facets=tuple(sorted(edges, key=sort_key)))


def random_uniform_family(n: int, k: int, count: int, rng: random.Random) -> List[VertexSet]:
    """[n] の相異なる k 元部分集合を count 個、一様に選ぶ"""
    total = binomial(n, k)
    if not 1 <= count <= total:
        raise InvalidArgument(f"random_uniform_family: 1 <= count <= {total} が必要です")
    return sorted(rng.sample(subsets_of_size(full_set(n), k), count))


def random_pure_ideal(n: int, d: int, count: int, rng: random.Random) -> MonomialIdeal:
    return normalize_ideal(random_uniform_family(n, d, count, rng), n)
