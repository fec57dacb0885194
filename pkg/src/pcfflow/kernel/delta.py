"""Δ-system 兼容性演示模块.

在有限族上精确穷举：寻找一个子族，其 support 两两相交于同一个根 A，
在 A 上的 color/rel 限制相同、bound 相同，并满足顺序性质；然后对子族的每一对
运行 amalgamate 以证明两两兼容。这是对可数链条件论证的有限演示，不是定理检查器。
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

from ..ordinal import Ordinal, successor
from .exceptions import AmalgamationPreconditionError, SearchGuardExceededError
from .models import DELTA_MAX_FAMILY, Condition, DeltaSystem
from .tool import amalgamate

logger = logging.getLogger(__name__)


def _common_root(supports: Sequence[frozenset[Ordinal]]) -> frozenset[Ordinal] | None:
    """所有两两交集相同则返回该交集（单个成员时根为其 support）."""
    if len(supports) == 1:
        return supports[0]
    root = supports[0] & supports[1]
    for a, b in itertools.combinations(supports, 2):
        if a & b != root:
            return None
    return root


def _root_data(p: Condition, root: frozenset[Ordinal]) -> tuple:
    colors = tuple(sorted((x, p.color[x]) for x in root))
    rel = tuple(sorted((a, b) for a, b in p.rel if a in root and b in root))
    return colors, rel, p.bound


def _ordered(
    members: list[tuple[int, Condition]], root: frozenset[Ordinal]
) -> list[tuple[int, Condition]] | None:
    """按非根部分排序并检查顺序性质，不满足时返回 None.

    顺序性质：靠前成员的每个元素都小于靠后成员的每个非根元素。另外要求根元素
    与成员自身的非根元素之间没有 1-对（根元素指向非根元素时，该非根元素的颜色
    必须不小于公共 bound，这不可能；在不可数论证中这只会发生在首个成员上，
    丢弃即可，有限族上则直接排除）。
    """
    ordered = sorted(members, key=lambda item: sorted(item[1].support - root))
    for (_, earlier), (_, later) in itertools.combinations(ordered, 2):
        tail = later.support - root
        if tail and earlier.support and max(earlier.support) >= min(tail):
            return None
    for _, p in ordered:
        if any(a in root and b not in root for a, b in p.rel):
            return None
    return ordered


def _certify(ordered: list[tuple[int, Condition]]) -> tuple[Condition, ...] | None:
    """对每一对 (靠前 q, 靠后 p) 以 η = max(S_q)+1 运行 amalgamate."""
    certificates = []
    for (_, q), (_, p) in itertools.combinations(ordered, 2):
        eta = successor(max(q.support)) if q.support else Ordinal()
        try:
            certificates.append(amalgamate(p, q, eta))
        except AmalgamationPreconditionError as e:
            logger.warning(f"Δ-system 候选的兼容性证明失败: {e}")
            return None
    return tuple(certificates)


def delta_system_demo(
    family: Sequence[Condition],
    target: int,
    max_family: int = DELTA_MAX_FAMILY,
) -> DeltaSystem | None:
    """寻找大小不小于 target 的 Δ-system 子族并证明两两兼容.

    子集按规模从大到小、同规模按下标字典序枚举，返回第一个满足要求的子族。

    Args:
        family: 合法条件列表
        target: 子族的最小规模
        max_family: 族规模上限

    Returns:
        DeltaSystem；不存在满足要求的子族时返回 None

    Raises:
        SearchGuardExceededError: 族规模超过 max_family
    """
    if len(family) > max_family:
        raise SearchGuardExceededError(f"族规模 {len(family)} 超过穷举上限 {max_family}")

    indexed = list(enumerate(family))
    for size in range(len(family), max(target, 1) - 1, -1):
        for subset in itertools.combinations(indexed, size):
            members = list(subset)
            root = _common_root([p.support for _, p in members])
            if root is None:
                continue
            if len({_root_data(p, root) for _, p in members}) != 1:
                logger.debug(f"候选 {[i for i, _ in members]} 在根上的数据或 bound 不一致")
                continue
            ordered = _ordered(members, root)
            if ordered is None:
                logger.debug(f"候选 {[i for i, _ in members]} 不满足顺序性质")
                continue
            certificates = _certify(ordered)
            if certificates is None:
                continue
            return DeltaSystem(
                indices=tuple(i for i, _ in ordered),
                members=tuple(p for _, p in ordered),
                root=root,
                certificates=certificates,
            )
    return None
