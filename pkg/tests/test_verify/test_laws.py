"""随机定律检查单元测试."""

import random
from dataclasses import replace

import pytest

from pcfflow.kernel import amalgamate, is_stronger, restrict, validate
from pcfflow.verify import LAW_NAMES, LawSuiteConfig, LawSuiteConfigError, check_condition_laws
from pcfflow.verify.laws import random_condition, random_cut, random_extension_below


def drop_first_pair(p, q, eta):
    """删除 q 的一个 1-对的缺陷实现."""
    r = amalgamate(p, q, eta)
    if not q.rel:
        return r
    return replace(r, rel=r.rel - {min(q.rel)})


class TestLawSuiteConfig:
    """LawSuiteConfig 测试."""

    def test_defaults(self) -> None:
        """测试默认值."""
        config = LawSuiteConfig()
        assert config.samples == 1000
        assert config.seed == 42
        assert config.amalgamation_instances == 1000

    def test_instances(self) -> None:
        """测试单独指定实例数."""
        assert LawSuiteConfig(samples=10, instances=3).amalgamation_instances == 3

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"samples": -1},
            {"instances": -1},
            {"max_support": 0},
            {"oracle_max_support": -1},
            {"max_exponent": 0},
        ],
    )
    def test_invalid(self, kwargs) -> None:
        """测试非法参数."""
        with pytest.raises(LawSuiteConfigError):
            LawSuiteConfig(**kwargs)


class TestGenerators:
    """随机生成器测试."""

    def test_random_conditions_valid(self) -> None:
        """测试生成的条件都合法."""
        config = LawSuiteConfig()
        rng = random.Random(0)
        for _ in range(300):
            p = random_condition(rng, config)
            assert validate(p) == []
            assert len(p.support) <= config.max_support

    def test_extensions_stronger(self) -> None:
        """测试生成的 q 在 η 以下且强于 p↾η."""
        config = LawSuiteConfig()
        rng = random.Random(1)
        for _ in range(300):
            p = random_condition(rng, config)
            eta = random_cut(rng, p, config)
            base = restrict(p, eta)
            q = random_extension_below(rng, base, eta, config)
            assert validate(q) == []
            assert all(x < eta for x in q.support)
            assert is_stronger(q, base)

    def test_seeded(self) -> None:
        """测试相同种子得到相同条件."""
        config = LawSuiteConfig()
        first = [random_condition(random.Random(9), config) for _ in range(3)]
        second = [random_condition(random.Random(9), config) for _ in range(3)]
        assert first == second


class TestCheckConditionLaws:
    """check_condition_laws 测试."""

    def test_passes(self) -> None:
        """测试 (200, 42) 全部通过."""
        report = check_condition_laws(200, 42)
        assert report.passed, [check.witness for check in report.failures]
        names = {check.name for check in report.checks}
        assert names <= set(LAW_NAMES)
        assert {"law:amalgamate-valid", "law:restrict-r-equals-q", "law:oracle-agreement"} <= names

    def test_zero_samples(self) -> None:
        """测试 samples=0 得到空且通过的报告."""
        report = check_condition_laws(0, 42)
        assert report.checks == []
        assert report.passed

    def test_deterministic(self) -> None:
        """测试相同种子得到相同报告."""
        first = check_condition_laws(50, 7)
        second = check_condition_laws(50, 7)
        assert [(c.name, c.message) for c in first.checks] == [
            (c.name, c.message) for c in second.checks
        ]

    def test_detects_broken_amalgamation(self) -> None:
        """测试有缺陷的 amalgamation 被发现."""
        report = check_condition_laws(200, 42, amalgamator=drop_first_pair)
        assert not report.passed
        result = report.get("law:restrict-r-equals-q")
        assert not result.passed
        assert result.witness[0]["sample"] >= 0

    def test_detects_raising_amalgamation(self) -> None:
        """测试 amalgamation 抛出异常时记为失败."""

        def raising(p, q, eta):
            raise RuntimeError("boom")

        report = check_condition_laws(20, 42, amalgamator=raising)
        assert not report.get("law:amalgamate-valid").passed

    def test_config_overrides(self) -> None:
        """测试给出 config 时使用其参数."""
        report = check_condition_laws(config=LawSuiteConfig(samples=30, instances=0, seed=3))
        names = {check.name for check in report.checks}
        assert "law:amalgamate-valid" not in names
        assert "law:stronger-reflexive" in names

    @pytest.mark.slow
    def test_acceptance_scale(self) -> None:
        """测试 10000 个条件与 2000 个 amalgamation 实例零失败."""
        report = check_condition_laws(
            config=LawSuiteConfig(samples=10000, instances=2000, seed=42)
        )
        assert report.passed, [check.witness for check in report.failures]
