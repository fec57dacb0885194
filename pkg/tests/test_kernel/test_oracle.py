"""共同扩张穷举判定单元测试."""

import random

import pytest

from pcfflow.kernel import (
    SearchGuardExceededError,
    amalgamate,
    compat_oracle,
    empty,
    is_compatible,
    is_stronger,
    restrict,
    validate,
)
from pcfflow.ordinal import Ordinal, parse
from pcfflow.verify import LawSuiteConfig
from pcfflow.verify.laws import random_condition, random_cut, random_extension_below

W = Ordinal.omega()


class TestCompatOracle:
    """compat_oracle 测试."""

    def test_self(self, cond) -> None:
        """测试 (p, p) → p."""
        p = cond({"2": 1, "w": 0}, [("w", "2")])
        assert compat_oracle(p, p) == p

    def test_empty_pair(self) -> None:
        """测试两个空条件."""
        assert compat_oracle(empty(), empty()) == empty()

    def test_amalgamation_example(self, cond) -> None:
        """测试 amalgamate 示例对：穷举结果与强制的跨越对一致."""
        p = cond({"5": 0, "w": 1}, [("w", "5")])
        q = cond({"5": 0, "3": 2}, [("5", "3")], bound=3)
        r = compat_oracle(p, q)
        assert r is not None
        assert validate(r) == []
        assert is_stronger(r, p) and is_stronger(r, q)
        assert (W, parse("3")) in r.rel
        assert (W, parse("3")) in amalgamate(p, q, W).rel

    def test_overlap_disagreement(self, cond) -> None:
        """测试共享对取值不同时不相容."""
        p = cond({"3": 1, "5": 0}, [("5", "3")])
        q = cond({"3": 1, "5": 0})
        assert compat_oracle(p, q) is None
        assert not is_compatible(p, q)

    def test_color_disagreement(self, cond) -> None:
        """测试共享元素颜色不同时不相容."""
        assert compat_oracle(cond({"5": 0}), cond({"5": 1})) is None

    def test_forced_incompatibility(self, cond) -> None:
        """测试传递性与子句 (v) 共同导致不相容.

        p 要求 rel(w,3)=1，q 要求 rel(3,1)=1，传递性迫使 rel(w,1)=1；
        而 1 对 p 是新元素且颜色小于 p 的 bound。
        """
        p = cond({"3": 0, "w": 1}, [("w", "3")])
        q = cond({"1": 1, "3": 0}, [("3", "1")])
        assert compat_oracle(p, q) is None

    def test_guard(self, cond) -> None:
        """测试 support 超过上限."""
        p = cond({str(i): i - 1 for i in range(1, 6)})
        q = cond({str(i): i - 6 for i in range(6, 11)})
        with pytest.raises(SearchGuardExceededError):
            compat_oracle(p, q, max_support=8)


class TestOracleEquivalence:
    """随机 amalgamation 实例上的穷举比对."""

    @pytest.mark.slow
    def test_500_random_instances(self) -> None:
        """测试 500 个实例：amalgamate 前置条件成立时穷举必能找到共同扩张."""
        config = LawSuiteConfig(samples=500, seed=5, max_support=4)
        rng = random.Random(config.seed)
        checked = 0
        for _ in range(20 * config.samples):
            if checked == config.samples:
                break
            p = random_condition(rng, config)
            eta = random_cut(rng, p, config)
            q = random_extension_below(rng, restrict(p, eta), eta, config)
            if len(p.support | q.support) > 6:
                continue
            r = amalgamate(p, q, eta)
            assert is_stronger(r, p) and is_stronger(r, q)
            found = compat_oracle(p, q, max_support=6)
            assert found is not None
            assert validate(found) == []
            assert is_stronger(found, p) and is_stronger(found, q)
            checked += 1
        assert checked == config.samples
