"""Δ-system 演示单元测试."""

import itertools
import random

import pytest

from pcfflow.kernel import (
    Condition,
    SearchGuardExceededError,
    delta_system_demo,
    is_stronger,
    validate,
)
from pcfflow.ordinal import Ordinal, parse


class TestDeltaSystemDemo:
    """delta_system_demo 测试."""

    def test_disjoint_supports(self, cond) -> None:
        """测试 support 两两不交的族."""
        family = [cond({"1": 0}), cond({"2": 0}), cond({"3": 0})]
        result = delta_system_demo(family, 3)
        assert result is not None
        assert result.size == 3
        assert result.root == frozenset()
        assert result.indices == (0, 1, 2)
        assert len(result.certificates) == 3
        for r in result.certificates:
            assert validate(r) == []

    def test_certificates_extend_pairs(self, cond) -> None:
        """测试每个证明是对应两成员的共同扩张."""
        family = [cond({"3": 0}), cond({"1": 0})]
        result = delta_system_demo(family, 2)
        assert result is not None
        # 按非根部分排序
        assert result.indices == (1, 0)
        (r,) = result.certificates
        assert is_stronger(r, family[0]) and is_stronger(r, family[1])

    def test_identical_conditions(self, cond) -> None:
        """测试相同条件构成的族，根为整个 support."""
        p = cond({"1": 1, "w": 0}, [("w", "1")])
        result = delta_system_demo([p, p, p], 3)
        assert result is not None
        assert result.size == 3
        assert result.root == p.support

    def test_bound_mismatch(self, cond) -> None:
        """测试 bound 不同时不存在规模为 2 的子族."""
        family = [cond({"1": 0}, bound=1), cond({"2": 0}, bound=2)]
        assert delta_system_demo(family, 2) is None

    def test_picks_largest_subfamily(self, cond) -> None:
        """测试跳过 bound 不一致的成员."""
        family = [cond({"1": 0}), cond({"2": 0}, bound=3), cond({"3": 0}), cond({"4": 0})]
        result = delta_system_demo(family, 2)
        assert result is not None
        assert result.indices == (0, 2, 3)

    def test_root_edge_rejected(self, cond) -> None:
        """测试根元素指向非根元素的成员不能进入子族."""
        a = cond({"3": 1, "5": 0}, [("5", "3")])
        b = cond({"5": 0, "7": 1})
        assert delta_system_demo([a, b], 2) is None

    def test_order_property(self, cond) -> None:
        """测试非根部分交错时不满足顺序性质."""
        a = cond({"1": 0, "4": 1})
        b = cond({"2": 0, "3": 1})
        assert delta_system_demo([a, b], 2) is None

    def test_guard(self, cond) -> None:
        """测试族规模超过上限."""
        family = [cond({str(i): 0}) for i in range(1, 14)]
        with pytest.raises(SearchGuardExceededError):
            delta_system_demo(family, 2)

    def test_root_matches_members(self, cond) -> None:
        """测试公共根上的数据一致."""
        family = [cond({"w": 0, "w+1": 1}), cond({"w": 0, "w+2": 1})]
        result = delta_system_demo(family, 2)
        assert result is not None
        assert result.root == frozenset({parse("w")})


def _attach(
    rng: random.Random,
    alpha: Ordinal,
    candidates: list[Ordinal],
    reach: dict[Ordinal, frozenset[Ordinal]],
    color: dict[Ordinal, int],
    bound: int,
) -> None:
    """α 随机指向若干候选元素及其全部后继，颜色避开这些元素."""
    below = {alpha}
    for beta in candidates:
        if rng.random() < 0.4:
            below |= reach[beta]
    reach[alpha] = frozenset(below)
    used = {color[x] for x in below if x != alpha}
    color[alpha] = rng.choice([c for c in range(bound) if c not in used])


def _random_delta_family(rng: random.Random) -> tuple[list[Condition], frozenset[Ordinal]]:
    """共享有限根的族：第 i 个成员的非根元素位于 [w*(i+1), w*(i+2))."""
    bound = 8
    root = sorted(Ordinal.of(n) for n in rng.sample(range(6), rng.randint(0, 3)))
    reach: dict[Ordinal, frozenset[Ordinal]] = {}
    color: dict[Ordinal, int] = {}
    for i, alpha in enumerate(root):
        _attach(rng, alpha, root[:i], reach, color, bound)

    family = []
    for i in range(rng.randint(2, 6)):
        tail = [Ordinal.omega(1, i + 1) + Ordinal.of(j) for j in range(rng.randint(1, 3))]
        member_reach = dict(reach)
        member_color = dict(color)
        for alpha in tail:
            _attach(rng, alpha, root, member_reach, member_color, bound)
        support = frozenset(root) | frozenset(tail)
        family.append(
            Condition(
                support=support,
                color={x: member_color[x] for x in support},
                rel=frozenset((a, b) for a in support for b in member_reach[a]),
                bound=bound,
            )
        )
    rng.shuffle(family)
    return family, frozenset(root)


@pytest.mark.slow
class TestDeltaSystemRandomized:
    """50 个构造出的 Δ-system 族."""

    def test_constructed_families(self) -> None:
        """测试整个族被识别为 Δ-system，且每个证明是对应两成员的共同扩张."""
        rng = random.Random(23)
        for _ in range(50):
            family, root = _random_delta_family(rng)
            for p in family:
                assert validate(p) == []
            result = delta_system_demo(family, len(family))
            assert result is not None
            assert result.size == len(family)
            assert result.root == root
            assert sorted(result.indices) == list(range(len(family)))
            pairs = list(itertools.combinations(result.members, 2))
            assert len(result.certificates) == len(pairs)
            for r, (q, p) in zip(result.certificates, pairs):
                assert validate(r) == []
                assert is_stronger(r, p) and is_stronger(r, q)
