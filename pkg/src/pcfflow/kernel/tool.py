"""forcing 条件内核核心实现模块.

提供条件校验、扩张关系、限制 p↾η 与 amalgamation。所有函数都是纯函数，
输入输出均为不可变值。
"""

from __future__ import annotations

import logging
from collections import defaultdict

from ..ordinal import Ordinal
from .exceptions import AmalgamationPreconditionError
from .models import Condition, Pair, Violation, ViolationClause

logger = logging.getLogger(__name__)


def empty() -> Condition:
    """空条件 (∅, ∅, ∅, 0)，每条 chain 的起点."""
    return Condition()


# ------------------------------------------------------------------
# 校验
# ------------------------------------------------------------------


def validate(p: Condition) -> list[Violation]:
    """检查条件的五条不变式.

    Args:
        p: 待检查的条件

    Returns:
        Violation 列表；空列表表示条件合法
    """
    violations: list[Violation] = []
    support = p.sorted_support()

    for alpha in support:
        if (alpha, alpha) not in p.rel:
            violations.append(
                Violation(
                    ViolationClause.REFLEXIVITY,
                    (alpha,),
                    f"rel({alpha},{alpha}) 必须为 1",
                )
            )

    successors: dict[Ordinal, set[Ordinal]] = defaultdict(set)
    for alpha, beta in p.rel:
        successors[alpha].add(beta)

    for alpha, beta in sorted(p.rel):
        if alpha < beta:
            violations.append(
                Violation(
                    ViolationClause.ORDER_ZERO,
                    (alpha, beta),
                    f"{alpha} < {beta} 但 rel({alpha},{beta})=1",
                )
            )
        if beta < alpha and p.color[alpha] == p.color[beta]:
            violations.append(
                Violation(
                    ViolationClause.COLOR_CLASH,
                    (alpha, beta),
                    f"rel({alpha},{beta})=1 但两者颜色均为 {p.color[alpha]}",
                )
            )
        for gamma in sorted(successors[beta]):
            if gamma not in successors[alpha]:
                violations.append(
                    Violation(
                        ViolationClause.TRANSITIVITY,
                        (alpha, beta, gamma),
                        f"rel({alpha},{beta})=rel({beta},{gamma})=1 "
                        f"但 rel({alpha},{gamma})=0",
                    )
                )

    for alpha in support:
        if p.color[alpha] >= p.bound:
            violations.append(
                Violation(
                    ViolationClause.COLOR_RANGE,
                    (alpha,),
                    f"color({alpha})={p.color[alpha]} 不小于 bound {p.bound}",
                )
            )

    return violations


def is_valid(p: Condition) -> bool:
    return not validate(p)


# ------------------------------------------------------------------
# 扩张关系
# ------------------------------------------------------------------


def extension_violations(r: Condition, p: Condition) -> list[Violation]:
    """列出 "r 强于 p" 的五个子句 (i)–(v) 中失败的部分.

    子句 (v) 对所有新元素 β 量化；由于 α<β 时 rel(α,β) 必为 0，
    实际只有 β<α 的情形起作用。
    """
    violations: list[Violation] = []

    missing = sorted(p.support - r.support)
    if missing:
        violations.append(
            Violation(ViolationClause.EXTENSION_I, tuple(missing), "support 未包含 p 的 support")
        )

    inherited = frozenset(
        (a, b) for a, b in r.rel if a in p.support and b in p.support
    )
    for alpha, beta in sorted(inherited ^ p.rel):
        violations.append(
            Violation(
                ViolationClause.EXTENSION_II,
                (alpha, beta),
                f"rel({alpha},{beta}) 未延拓 p 的取值 {p.rel_value(alpha, beta)}",
            )
        )

    for alpha in p.sorted_support():
        if r.color.get(alpha) != p.color[alpha]:
            violations.append(
                Violation(
                    ViolationClause.EXTENSION_III,
                    (alpha,),
                    f"color({alpha}) 未延拓 p 的取值 {p.color[alpha]}",
                )
            )

    if r.bound < p.bound:
        violations.append(
            Violation(
                ViolationClause.EXTENSION_IV,
                (),
                f"bound {r.bound} 小于 p 的 bound {p.bound}",
            )
        )

    for alpha, beta in sorted(r.rel):
        if alpha in p.support and beta not in p.support and r.color[beta] < p.bound:
            violations.append(
                Violation(
                    ViolationClause.EXTENSION_V,
                    (alpha, beta),
                    f"新元素 {beta} 满足 rel({alpha},{beta})=1，"
                    f"但颜色 {r.color[beta]} 小于 p 的 bound {p.bound}",
                )
            )

    return violations


def is_stronger(r: Condition, p: Condition) -> bool:
    """r 是否强于 p（子句 (i)–(v) 全部成立）."""
    return not extension_violations(r, p)


def restrict(p: Condition, eta: Ordinal) -> Condition:
    """p↾η = (S_p∩η, π_p↾η, b_p↾(η×η), u_p)."""
    support = frozenset(x for x in p.support if x < eta)
    return Condition(
        support=support,
        color={x: p.color[x] for x in support},
        rel=frozenset((a, b) for a, b in p.rel if a < eta and b < eta),
        bound=p.bound,
    )


# ------------------------------------------------------------------
# Amalgamation
# ------------------------------------------------------------------


def amalgamate(p: Condition, q: Condition, eta: Ordinal) -> Condition:
    """合并截点 η 以下的 q 与 η 以上的 p，得到同时强于两者的条件 r.

    S_r = S_p ∪ S_q，π_r = π_p ∪ π_q，u_r = u_q。α >= η 属于 S_p、β 属于
    S_q - S_p 时，rel_r(α,β)=1 当且仅当存在 γ ∈ S_p∩η 使
    rel_p(α,γ)=rel_q(γ,β)=1；其余跨截点的对为 0。

    Args:
        p: 截点上方的条件
        q: 强于 p↾η 且 S_q ⊆ η 的条件
        eta: 截点

    Returns:
        强于 p 与 q 的条件 r，且 r↾η = q

    Raises:
        AmalgamationPreconditionError: q 不在 η 以下，或 q 不强于 p↾η
    """
    above = sorted(x for x in q.support if not x < eta)
    if above:
        raise AmalgamationPreconditionError(
            f"S_q 必须包含于 [0,{eta})，越界元素: {[str(x) for x in above]}"
        )
    failures = extension_violations(q, restrict(p, eta))
    if failures:
        clauses = ", ".join(v.clause.value for v in failures)
        raise AmalgamationPreconditionError(f"q 不强于 p↾{eta}: {clauses}", failures)

    # p 中 η 以下的元素都在 q 中（q 强于 p↾η）
    mediators = [x for x in p.support if x < eta]
    fresh = q.support - p.support
    cross: set[Pair] = set()
    for alpha in p.support:
        if alpha < eta:
            continue
        reach = [gamma for gamma in mediators if (alpha, gamma) in p.rel]
        for beta in fresh:
            if any((gamma, beta) in q.rel for gamma in reach):
                cross.add((alpha, beta))

    return Condition(
        support=p.support | q.support,
        color={**p.color, **q.color},
        rel=p.rel | q.rel | frozenset(cross),
        bound=q.bound,
    )


# ------------------------------------------------------------------
# forcing 读法
# ------------------------------------------------------------------


def forced_in_b(p: Condition, alpha: Ordinal, beta: Ordinal) -> bool | None:
    """p 对 "β ∈ B_α" 的判定：1-对强制成立，0-对强制不成立，support 外未定."""
    if alpha not in p.support or beta not in p.support:
        return None
    return (alpha, beta) in p.rel


def forced_color(p: Condition, alpha: Ordinal) -> int | None:
    """π_p(α)=n 强制 α ∈ A_n；α 不在 support 中时未定."""
    return p.color.get(alpha)


def trace_bound(p: Condition, alpha: Ordinal, n: int) -> frozenset[Ordinal] | None:
    """α ∈ S_p 且 u_p > n 时，p 强制 B_α∩A_n ⊆ S_p，返回 S_p；否则返回 None.

    之后加入且与 α 有 1-对的新元素颜色都不小于 u_p > n，因此落不进 A_n。
    """
    if alpha in p.support and p.bound > n:
        return p.support
    return None
