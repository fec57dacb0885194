"""条件偏序的随机定律检查.

生成方式固定，只依赖 random.Random(seed)：

- 随机序数：从 {0..max_exponent} 中随机取若干个指数降序排列，每项系数取
  1..max_coefficient；
- 随机条件：support 升序处理，每个 α 随机挑选若干更小的元素作为直接后继，
  取其后继闭包作为 B_α（因此 rel 传递且向下），颜色从 [0, bound) 中避开
  后继闭包里已用的颜色；bound 取 |S| 加 0..2；
- amalgamation 实例：在 p↾η 上加入若干 η 以下的新元素 β，每个新元素使用
  全新的颜色（bound 随之加一），要么挂在一组已有元素及其全部祖先之下，要么
  指向一组已有元素及其全部后继。这样得到的 q 必然强于 p↾η。
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from typing import Any

from ..kernel import (
    Condition,
    ViolationClause,
    amalgamate,
    compat_oracle,
    is_stronger,
    restrict,
    validate,
)
from ..ordinal import Ordinal, successor
from .models import CheckResult, LawSuiteConfig, Report

logger = logging.getLogger(__name__)

Amalgamator = Callable[[Condition, Condition, Ordinal], Condition]

LAW_NAMES = (
    "law:validate-sound",
    "law:stronger-reflexive",
    "law:stronger-transitive",
    "law:stronger-antisymmetric",
    "law:restrict-weaker",
    "law:amalgamate-valid",
    "law:amalgamate-stronger",
    "law:restrict-r-equals-q",
    "law:oracle-agreement",
    "law:oracle-sound",
)

_MAX_DRAWS = 64


# ------------------------------------------------------------------
# 生成器
# ------------------------------------------------------------------


def random_ordinal(rng: random.Random, config: LawSuiteConfig) -> Ordinal:
    count = rng.randint(0, config.max_exponent + 1)
    exponents = sorted(rng.sample(range(config.max_exponent + 1), count), reverse=True)
    return Ordinal(tuple((e, rng.randint(1, config.max_coefficient)) for e in exponents))


def _fresh_ordinals(
    rng: random.Random,
    config: LawSuiteConfig,
    count: int,
    taken: frozenset[Ordinal] = frozenset(),
    below: Ordinal | None = None,
) -> list[Ordinal]:
    found: set[Ordinal] = set()
    for _ in range(_MAX_DRAWS * max(count, 1)):
        if len(found) >= count:
            break
        x = random_ordinal(rng, config)
        if x in taken or (below is not None and not x < below):
            continue
        found.add(x)
    return sorted(found)


def random_condition(rng: random.Random, config: LawSuiteConfig) -> Condition:
    """生成一个合法条件."""
    support = _fresh_ordinals(rng, config, rng.randint(0, config.max_support))
    bound = len(support) + rng.randint(0, 2)
    descendants: dict[Ordinal, set[Ordinal]] = {}
    color: dict[Ordinal, int] = {}
    rel: set[tuple[Ordinal, Ordinal]] = set()
    for i, alpha in enumerate(support):
        reach = {alpha}
        for beta in support[:i]:
            if rng.random() < 0.35:
                reach |= descendants[beta]
        descendants[alpha] = reach
        used = {color[x] for x in reach if x != alpha}
        color[alpha] = rng.choice([c for c in range(bound) if c not in used])
        rel |= {(alpha, x) for x in reach}
    return Condition(
        support=frozenset(support), color=color, rel=frozenset(rel), bound=bound
    )


def random_cut(rng: random.Random, p: Condition, config: LawSuiteConfig) -> Ordinal:
    """截点：0、某个 support 元素或其后继、或随机序数."""
    choice = rng.randint(0, 3)
    members = p.sorted_support()
    if choice == 0 or (choice < 3 and not members):
        return Ordinal()
    if choice == 1:
        return rng.choice(members)
    if choice == 2:
        return successor(rng.choice(members))
    return random_ordinal(rng, config)


def random_extension_below(
    rng: random.Random, base: Condition, eta: Ordinal, config: LawSuiteConfig
) -> Condition:
    """在 base（S ⊆ η）上加入 η 以下的新元素，得到强于 base 的条件."""
    support = set(base.support)
    color = dict(base.color)
    rel = set(base.rel)
    bound = base.bound + rng.randint(0, 2)

    for beta in _fresh_ordinals(rng, config, rng.randint(0, 3), frozenset(support), eta):
        present = sorted(support)
        if rng.random() < 0.5:
            # 挂在已有元素及其全部祖先之下
            seeds = [x for x in present if beta < x and rng.random() < 0.5]
            linked = {a for a, b in rel if b in seeds}
            rel |= {(a, beta) for a in linked}
        else:
            # 指向已有元素及其全部后继
            seeds = [x for x in present if x < beta and rng.random() < 0.5]
            linked = {b for a, b in rel if a in seeds}
            rel |= {(beta, b) for b in linked}
        support.add(beta)
        rel.add((beta, beta))
        color[beta] = bound
        bound += 1

    return Condition(support=frozenset(support), color=color, rel=frozenset(rel), bound=bound)


# ------------------------------------------------------------------
# 检查
# ------------------------------------------------------------------


@dataclass
class _Tally:
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    def record(self, ok: bool, sample: int, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append({"sample": sample, "detail": detail})


class _LawSuite:
    def __init__(self, config: LawSuiteConfig, amalgamator: Amalgamator):
        self.config = config
        self.amalgamator = amalgamator
        self.rng = random.Random(config.seed)
        self.tallies = {name: _Tally() for name in LAW_NAMES}

    def record(self, name: str, ok: bool, sample: int, detail: str = "") -> None:
        self.tallies[name].record(ok, sample, detail)

    def check_condition(self, i: int, p: Condition, previous: Condition | None) -> None:
        violations = validate(p)
        self.record("law:validate-sound", not violations, i, f"生成的条件不合法: {violations}")
        if p.support:
            alpha = self.rng.choice(p.sorted_support())
            broken = replace(p, rel=p.rel - {(alpha, alpha)})
            clauses = {v.clause for v in validate(broken)}
            self.record(
                "law:validate-sound",
                ViolationClause.REFLEXIVITY in clauses,
                i,
                f"删除 rel({alpha},{alpha}) 后未报告 reflexivity",
            )
            out_of_range = replace(p, color={**p.color, alpha: p.bound})
            clauses = {v.clause for v in validate(out_of_range)}
            self.record(
                "law:validate-sound",
                ViolationClause.COLOR_RANGE in clauses,
                i,
                f"color({alpha})=bound 后未报告 color-range",
            )

        self.record("law:stronger-reflexive", is_stronger(p, p), i, "p 不强于自身")

        eta = random_cut(self.rng, p, self.config)
        weaker = restrict(p, eta)
        self.record(
            "law:restrict-weaker",
            not validate(weaker) and is_stronger(p, weaker),
            i,
            f"p↾{eta} 不合法或不弱于 p",
        )
        if is_stronger(weaker, p):
            self.record("law:stronger-antisymmetric", weaker == p, i, "互相强于但不相等")

        if previous is not None:
            union = p.support | previous.support
            if len(union) <= self.config.oracle_max_support:
                r = compat_oracle(p, previous, max_support=self.config.oracle_max_support)
                ok = r is None or (
                    not validate(r) and is_stronger(r, p) and is_stronger(r, previous)
                )
                self.record("law:oracle-sound", ok, i, "穷举结果不是共同扩张")

    def check_instance(self, i: int, p: Condition) -> None:
        eta = random_cut(self.rng, p, self.config)
        base = restrict(p, eta)
        q = random_extension_below(self.rng, base, eta, self.config)

        try:
            r = self.amalgamator(p, q, eta)
        except Exception as e:
            self.record("law:amalgamate-valid", False, i, f"amalgamate 抛出异常: {e}")
            return

        violations = validate(r)
        self.record("law:amalgamate-valid", not violations, i, f"r 不合法: {violations}")
        self.record(
            "law:amalgamate-stronger",
            is_stronger(r, p) and is_stronger(r, q),
            i,
            "r 不同时强于 p 与 q",
        )
        self.record("law:restrict-r-equals-q", restrict(r, eta) == q, i, f"r↾{eta} ≠ q")

        # q ≤ p↾η, r ≤ q ⇒ r ≤ p↾η
        if is_stronger(q, base) and is_stronger(r, q):
            self.record(
                "law:stronger-transitive", is_stronger(r, base), i, "扩张关系不传递"
            )
        if is_stronger(q, base) and is_stronger(base, q):
            self.record("law:stronger-antisymmetric", q == base, i, "互相强于但不相等")

        if len(p.support | q.support) <= self.config.oracle_max_support:
            found = compat_oracle(p, q, max_support=self.config.oracle_max_support)
            self.record(
                "law:oracle-agreement",
                found is not None,
                i,
                "amalgamation 前置条件成立但穷举未找到共同扩张",
            )

    def run(self) -> Report:
        instances = self.config.amalgamation_instances
        previous: Condition | None = None
        for i in range(max(self.config.samples, instances)):
            p = random_condition(self.rng, self.config)
            if i < self.config.samples:
                self.check_condition(i, p, previous)
            if i < instances:
                self.check_instance(i, p)
            previous = p

        checks = []
        for name in LAW_NAMES:
            tally = self.tallies[name]
            if tally.checked == 0:
                continue
            checks.append(
                CheckResult(
                    name=name,
                    passed=not tally.failures,
                    witness=tally.failures[:5] or None,
                    evidence={"checked": tally.checked},
                    message=f"{tally.checked} 次检查，{len(tally.failures)} 次失败",
                )
            )
        return Report(
            checks=sorted(checks, key=lambda c: c.name),
            banner=f"随机定律检查：seed={self.config.seed}，"
            f"{self.config.samples} 个条件，{instances} 个 amalgamation 实例",
        )


def check_condition_laws(
    samples: int = 1000,
    seed: int = 42,
    *,
    config: LawSuiteConfig | None = None,
    amalgamator: Amalgamator = amalgamate,
) -> Report:
    """在随机条件上检查偏序与 amalgamation 的定律.

    Args:
        samples: 随机条件数（同时也是 amalgamation 实例数）
        seed: 随机种子
        config: 完整配置；给出时忽略 samples 与 seed
        amalgamator: 被检查的 amalgamation 实现，测试中可替换为有缺陷的版本

    Returns:
        Report，每条定律一项；samples 为 0 时报告为空且通过

    Raises:
        LawSuiteConfigError: 配置不合法
    """
    if config is None:
        config = LawSuiteConfig(samples=samples, seed=seed)
    logger.info(
        f"开始随机定律检查: seed={config.seed}, samples={config.samples}, "
        f"instances={config.amalgamation_instances}"
    )
    report = _LawSuite(config, amalgamator).run()
    logger.info(f"随机定律检查完成: {report.passed_count} 通过, {report.failed_count} 失败")
    return report
