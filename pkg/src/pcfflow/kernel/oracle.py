"""共同扩张的穷举判定模块.

compat_oracle 与 amalgamate 相互独立，用作 amalgamate 的正确性参照。

完备性说明：候选扩张固定 support = S_p ∪ S_q、color = π_p ∪ π_q、
bound = max(u_p, u_q)，只对未被强制的跨越对枚举 0/1。若存在更大的共同扩张 r'，
把 r' 限制到 S_p ∪ S_q（保留其颜色）仍是条件且仍强于 p 与 q；而 bound 只出现在
color-range 子句中，子句 (v) 引用的是 u_p/u_q 而非 u_r，所以取最小的合法 bound
不会丢解。搜索规模为 2^跨越对数，仅适用于小 support。
"""

from __future__ import annotations

import itertools
import logging

from .exceptions import SearchGuardExceededError
from .models import ORACLE_MAX_SUPPORT, Condition, Pair
from .tool import is_stronger, validate

logger = logging.getLogger(__name__)


def _agree_on_overlap(p: Condition, q: Condition) -> bool:
    overlap = p.support & q.support
    if any(p.color[x] != q.color[x] for x in overlap):
        return False
    p_part = frozenset((a, b) for a, b in p.rel if a in overlap and b in overlap)
    q_part = frozenset((a, b) for a, b in q.rel if a in overlap and b in overlap)
    return p_part == q_part


def compat_oracle(
    p: Condition, q: Condition, max_support: int = ORACLE_MAX_SUPPORT
) -> Condition | None:
    """穷举寻找 p 与 q 的共同扩张.

    Args:
        p: 合法条件
        q: 合法条件
        max_support: S_p ∪ S_q 的规模上限

    Returns:
        按规范顺序找到的第一个共同扩张；不存在时返回 None

    Raises:
        SearchGuardExceededError: S_p ∪ S_q 超过 max_support
    """
    if not _agree_on_overlap(p, q):
        return None

    support = p.support | q.support
    if len(support) > max_support:
        raise SearchGuardExceededError(
            f"support 规模 {len(support)} 超过穷举上限 {max_support}"
        )

    only_p = p.support - q.support
    only_q = q.support - p.support
    forced = p.rel | q.rel
    # α<β 的跨越对由 order-zero 子句强制为 0，只枚举 α>β 的一侧
    free: list[Pair] = sorted(
        (a, b)
        for a, b in itertools.chain(
            itertools.product(only_p, only_q), itertools.product(only_q, only_p)
        )
        if b < a
    )
    color = {**p.color, **q.color}
    bound = max(p.bound, q.bound)

    for bits in itertools.product((0, 1), repeat=len(free)):
        chosen = frozenset(pair for pair, bit in zip(free, bits) if bit)
        candidate = Condition(support=support, color=color, rel=forced | chosen, bound=bound)
        if validate(candidate):
            continue
        if is_stronger(candidate, p) and is_stronger(candidate, q):
            return candidate

    logger.debug(f"穷举 {2 ** len(free)} 个候选后未找到共同扩张")
    return None


def is_compatible(p: Condition, q: Condition, max_support: int = ORACLE_MAX_SUPPORT) -> bool:
    """p 与 q 是否存在共同扩张."""
    return compat_oracle(p, q, max_support=max_support) is not None
