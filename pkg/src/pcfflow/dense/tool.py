"""稠密集成员判定与 meet 构造模块.

meet 的构造逐条遵循稠密性证明：AddOrdinal 追加新序数并给它一个新颜色，
RaiseU 抬高 bound，Separate 在截点 η=α+1 以下构造 q 后与当前条件 amalgamate。
"""

from __future__ import annotations

import logging

from ..kernel import Condition, amalgamate
from ..ordinal import Ordinal, successor
from .models import AddOrdinal, DenseSetSpec, MeetResult, RaiseU, Separate

logger = logging.getLogger(__name__)


def separation_witnesses(spec: Separate, p: Condition) -> list[Ordinal]:
    """列出 p 中所有见证 Separate 成员资格的 β（升序）."""
    if spec.alpha not in p.support or not spec.avoid <= p.support:
        return []
    return [
        beta
        for beta in p.sorted_support()
        if spec.gamma <= beta < spec.lam
        and (spec.alpha, beta) in p.rel
        and all((a, beta) not in p.rel for a in spec.avoid)
    ]


def member(spec: DenseSetSpec, p: Condition) -> bool:
    """p 是否属于 spec 描述的稠密集."""
    if isinstance(spec, AddOrdinal):
        return spec.alpha in p.support
    if isinstance(spec, RaiseU):
        return p.bound >= spec.n
    if isinstance(spec, Separate):
        return bool(separation_witnesses(spec, p))
    raise TypeError(f"不支持的稠密集类型: {type(spec).__name__}")


def _add_ordinal(alpha: Ordinal, p: Condition) -> Condition:
    """追加 α：rel(α,α)=1，其余跨越对为 0，color(α)=u_p，bound 加一."""
    if alpha in p.support:
        return p
    return Condition(
        support=p.support | {alpha},
        color={**p.color, alpha: p.bound},
        rel=p.rel | {(alpha, alpha)},
        bound=p.bound + 1,
    )


def _raise_u(n: int, p: Condition) -> Condition:
    if p.bound >= n:
        return p
    return Condition(support=p.support, color=dict(p.color), rel=p.rel, bound=n)


def _least_fresh(gamma: Ordinal, lam: Ordinal, support: frozenset[Ordinal]) -> Ordinal:
    """γ 起逐个取后继，返回第一个不在 support 中的 β（必小于极限 λ）."""
    beta = gamma
    while beta in support:
        beta = successor(beta)
    assert beta < lam, f"β={beta} 越过了 λ={lam}"
    return beta


def _separate(spec: Separate, p: Condition) -> MeetResult:
    current = p
    for x in [spec.alpha, *sorted(spec.avoid)]:
        current = _add_ordinal(x, current)

    alpha = spec.alpha
    beta = _least_fresh(spec.gamma, spec.lam, current.support)
    eta = successor(alpha)
    below = frozenset(x for x in current.support if x < eta)

    # S 中指向 α 的只有 α 自身（x<α 时 rel(x,α)=0），添加单条边 (α,β) 不破坏传递性
    into_alpha = {x for x in below if (x, alpha) in current.rel}
    assert into_alpha == {alpha}, f"S 中指向 {alpha} 的元素异常: {into_alpha}"

    q = Condition(
        support=below | {beta},
        color={**{x: current.color[x] for x in below}, beta: current.bound},
        rel=frozenset((a, b) for a, b in current.rel if a in below and b in below)
        | {(alpha, beta), (beta, beta)},
        bound=current.bound + 1,
    )
    return MeetResult(result=amalgamate(current, q, eta), witness=beta)


def meet(spec: DenseSetSpec, p: Condition) -> MeetResult:
    """构造一个属于 spec 且强于 p 的条件.

    Args:
        spec: 稠密集
        p: 合法条件

    Returns:
        MeetResult；Separate 时附带见证 β

    Raises:
        AmalgamationPreconditionError: Separate 内部 amalgamate 的前置条件不成立
            （属于实现缺陷，由调用方作为缺陷上报）
    """
    if isinstance(spec, AddOrdinal):
        return MeetResult(result=_add_ordinal(spec.alpha, p))
    if isinstance(spec, RaiseU):
        return MeetResult(result=_raise_u(spec.n, p))
    if isinstance(spec, Separate):
        outcome = _separate(spec, p)
        logger.debug(f"{spec} 选出见证 β={outcome.witness}")
        return outcome
    raise TypeError(f"不支持的稠密集类型: {type(spec).__name__}")
