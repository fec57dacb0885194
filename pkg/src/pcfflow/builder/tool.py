"""chain 构造核心实现模块.

把有限的稠密集调度从空条件起逐个 meet，得到递增条件链，再按 B_α / A_n 的
定义从末条件读出结构。
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from typing import Any

from ..dense import AddOrdinal, DenseSetError, RaiseU, Separate, meet, member
from ..kernel import AmalgamationPreconditionError, Condition, empty, is_stronger, trace_bound
from ..ordinal import Ordinal, OrdinalError
from .exceptions import ChainDefectError, ScheduleError, StructureDecodeError
from .models import (
    AuditEntry,
    Chain,
    ChainStep,
    PcfStructure,
    Schedule,
    ScheduleParams,
    SeparationTuple,
)

logger = logging.getLogger(__name__)


def make_schedule(
    ordinals: Iterable[Ordinal],
    colors: int,
    separations: Iterable[SeparationTuple],
) -> Schedule:
    """生成调度：排序后的 AddOrdinal，随后 RaiseU(colors)，最后按给定顺序的 Separate.

    colors 为 0 时不生成 RaiseU（它对任何条件都是空操作）。

    Args:
        ordinals: 采样的序数
        colors: 颜色数 N
        separations: (λ, α, γ, avoid) 元组

    Returns:
        Schedule

    Raises:
        ScheduleError: 某个分离元组不合法，消息包含其下标与违反的约束
    """
    if colors < 0:
        raise ScheduleError(f"colors 必须为自然数，当前值: {colors}")
    sample = tuple(sorted(set(ordinals)))
    tuples = tuple(
        (lam, alpha, gamma, frozenset(avoid)) for lam, alpha, gamma, avoid in separations
    )

    items: list[Any] = [AddOrdinal(alpha) for alpha in sample]
    if colors:
        items.append(RaiseU(colors))
    for index, (lam, alpha, gamma, avoid) in enumerate(tuples):
        try:
            items.append(Separate(lam=lam, alpha=alpha, gamma=gamma, avoid=avoid))
        except DenseSetError as e:
            raise ScheduleError(f"第 {index} 个分离元组不合法: {e}") from e

    return Schedule(
        items=tuple(items),
        params=ScheduleParams(ordinals=sample, colors=colors, separations=tuples),
    )


def load_schedule(data: dict[str, Any]) -> Schedule:
    """读取调度文件内容.

    支持完整形式 {"items", "params"}，以及只给出生成参数
    {"ordinals", "colors", "separations"} 的简写形式。

    Raises:
        StructureDecodeError: JSON 格式不正确
        ScheduleError: 生成参数不合法
    """
    if "items" in data:
        return Schedule.from_dict(data)
    try:
        params = ScheduleParams.from_dict(data)
    except (KeyError, TypeError, ValueError, AttributeError, OrdinalError) as e:
        raise StructureDecodeError(f"调度参数 JSON 格式不正确: {e}") from e
    return make_schedule(params.ordinals, params.colors, params.separations)


def run(schedule: Schedule) -> Chain:
    """从空条件起按顺序 meet 调度中的每个稠密集.

    整个过程没有随机性，相同调度得到逐位相同的 chain。

    Raises:
        ChainDefectError: amalgamation 前置条件失败（实现缺陷）
    """
    logger.info(f"开始构造 chain，调度项数: {len(schedule)}")
    condition = empty()
    steps: list[ChainStep] = []
    for index, spec in enumerate(schedule.items):
        try:
            outcome = meet(spec, condition)
        except AmalgamationPreconditionError as e:
            raise ChainDefectError(f"第 {index} 步 {spec} 的 amalgamation 失败: {e}") from e
        condition = outcome.result
        steps.append(ChainStep(index, spec, condition, outcome.witness))
        logger.debug(
            f"第 {index} 步 {spec}: |S|={len(condition.support)}, u={condition.bound}"
        )

    logger.info(
        f"chain 构造完成，步数: {len(steps)}，"
        f"末条件 |S|={len(condition.support)}，u={condition.bound}"
    )
    return Chain(schedule=schedule, steps=tuple(steps), final=condition)


def validate_chain(chain: Chain) -> list[str]:
    """重放检查 chain 的不变式.

    检查：每一步强于前一步（首步强于空条件）、每一步属于其稠密集、
    各步的稠密集与调度一致、final 等于末步条件。

    Returns:
        问题描述列表；空列表表示 chain 合法
    """
    problems: list[str] = []
    if len(chain.steps) != len(chain.schedule.items):
        problems.append(f"步数 {len(chain.steps)} 与调度项数 {len(chain.schedule)} 不一致")

    previous: Condition = empty()
    for position, step in enumerate(chain.steps):
        if step.index != position:
            problems.append(f"第 {position} 步的步号为 {step.index}")
        if position < len(chain.schedule) and step.spec != chain.schedule.items[position]:
            problems.append(f"第 {position} 步的稠密集与调度不符")
        if not is_stronger(step.condition, previous):
            problems.append(f"第 {position} 步的条件不强于前一步")
        if not member(step.spec, step.condition):
            problems.append(f"第 {position} 步的条件不属于 {step.spec}")
        previous = step.condition

    if chain.final != previous:
        problems.append("final 不等于末步条件")
    return problems


def _build_audit(chain: Chain) -> dict[tuple[Ordinal, int], AuditEntry]:
    """按顺序扫描各步，为每个 (α, n) 记录首个 α ∈ S 且 u > n 的步."""
    audit: dict[tuple[Ordinal, int], AuditEntry] = {}
    filled: dict[Ordinal, int] = {}
    for step in chain.steps:
        condition = step.condition
        for alpha in condition.sorted_support():
            for n in range(filled.get(alpha, 0), condition.bound):
                audit[(alpha, n)] = AuditEntry(
                    step=step.index, snapshot=trace_bound(condition, alpha, n)
                )
            filled[alpha] = max(filled.get(alpha, 0), condition.bound)
    return audit


def extract(chain: Chain) -> PcfStructure:
    """从 chain 读出 {B_α}、{A_n}、u 与审计表.

    rel 与 color 沿链只增不减，末条件承载了全部承诺。
    """
    final = chain.final
    B = {alpha: final.targets(alpha) for alpha in final.sorted_support()}
    classes: dict[int, set[Ordinal]] = {}
    for alpha in final.sorted_support():
        classes.setdefault(final.color[alpha], set()).add(alpha)

    return PcfStructure(
        bound_u=final.bound,
        B=B,
        classes={n: frozenset(members) for n, members in sorted(classes.items())},
        audit=_build_audit(chain),
        chain_len=len(chain.steps),
        witnesses=tuple(chain.witnesses()),
        schedule_digest=chain.schedule_digest,
    )
