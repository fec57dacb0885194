"""forcing 条件内核数据模型定义模块.

提供条件内核相关的数据模型，包括：
- Condition: 四元组 (S, π, b, u)
- ViolationClause: 可能失败的子句枚举
- Violation: 子句失败及其证据
- DeltaSystem: Δ-system 演示的结果
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..ordinal import Ordinal, format_ordinal, parse
from .exceptions import ConditionShapeError

Pair = tuple[Ordinal, Ordinal]

# 穷举搜索的默认保护上限
ORACLE_MAX_SUPPORT = 8
DELTA_MAX_FAMILY = 12


def _json_int(value: Any, name: str) -> int:
    """JSON 中的整数字段；拒绝布尔值与带小数的浮点数."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} 必须是整数，当前值: {value!r}")
    return value


class ViolationClause(str, Enum):
    """条件或扩张关系中可能失败的子句."""

    REFLEXIVITY = "reflexivity"  # rel(α,α)=1
    ORDER_ZERO = "order-zero"  # α<β 时 rel(α,β)=0
    TRANSITIVITY = "transitivity"
    COLOR_RANGE = "color-range"  # color(α) < bound
    COLOR_CLASH = "color-clash"  # rel(α,β)=1 且 β<α 时颜色不同
    EXTENSION_I = "extension-i"  # support 包含
    EXTENSION_II = "extension-ii"  # rel 延拓
    EXTENSION_III = "extension-iii"  # color 延拓
    EXTENSION_IV = "extension-iv"  # bound 不减
    EXTENSION_V = "extension-v"  # 新元素的颜色下限


@dataclass(frozen=True)
class Violation:
    """子句失败记录.

    Attributes:
        clause: 失败的子句
        offenders: 精确见证失败的序数（单点、序对或三元组）
        message: 可读说明
    """

    clause: ViolationClause
    offenders: tuple[Ordinal, ...] = ()
    message: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "clause": self.clause.value,
            "offenders": [format_ordinal(x) for x in self.offenders],
            "message": self.message,
        }


@dataclass(frozen=True)
class Condition:
    """forcing 条件 p = (S_p, π_p, b_p, u_p).

    b_p 以 1-对集合存储：support×support 内不在 rel 中的对读作 0。

    Attributes:
        support: 有限序数集合 S_p
        color: support → 自然数 的映射 π_p
        rel: b_p 取值为 1 的有序对集合
        bound: 自然数 u_p

    Raises:
        ConditionShapeError: color 的定义域不等于 support、rel 对越出 support、
            或出现负数

    Examples:
        >>> w = Ordinal.omega()
        >>> p = Condition(frozenset({w}), {w: 0}, frozenset({(w, w)}), 1)
    """

    support: frozenset[Ordinal] = frozenset()
    color: dict[Ordinal, int] = field(default_factory=dict, hash=False)
    rel: frozenset[Pair] = frozenset()
    bound: int = 0

    def __post_init__(self) -> None:
        """校验四元组的表示合法性."""
        if self.bound < 0:
            raise ConditionShapeError(f"bound 必须为自然数，当前值: {self.bound}")
        if set(self.color) != set(self.support):
            missing = sorted(set(self.support) - set(self.color))
            extra = sorted(set(self.color) - set(self.support))
            raise ConditionShapeError(
                f"color 的定义域必须等于 support，缺少: {[str(x) for x in missing]}，"
                f"多余: {[str(x) for x in extra]}"
            )
        for alpha, value in self.color.items():
            if value < 0:
                raise ConditionShapeError(f"color({alpha}) 必须为自然数，当前值: {value}")
        for alpha, beta in self.rel:
            if alpha not in self.support or beta not in self.support:
                raise ConditionShapeError(f"rel 对 ({alpha}, {beta}) 超出 support")

    def rel_value(self, alpha: Ordinal, beta: Ordinal) -> int:
        """b_p(α, β)，support 内缺省为 0."""
        return 1 if (alpha, beta) in self.rel else 0

    def sorted_support(self) -> list[Ordinal]:
        return sorted(self.support)

    def targets(self, alpha: Ordinal) -> frozenset[Ordinal]:
        """{β : b_p(α, β) = 1}."""
        return frozenset(beta for a, beta in self.rel if a == alpha)

    def to_dict(self) -> dict[str, Any]:
        """序列化为 CLI 使用的 JSON 对象，序数按升序排列."""
        support = self.sorted_support()
        return {
            "support": [format_ordinal(x) for x in support],
            "color": {format_ordinal(x): self.color[x] for x in support},
            "rel1": [
                [format_ordinal(a), format_ordinal(b)] for a, b in sorted(self.rel)
            ],
            "bound": self.bound,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Condition:
        """从 JSON 对象还原条件.

        Raises:
            ConditionShapeError: 缺少字段或表示不合法
            OrdinalParseError: 序数字符串不合法
        """
        try:
            support = frozenset(parse(x) for x in data["support"])
            color = {parse(k): _json_int(v, f"color[{k}]") for k, v in data["color"].items()}
            rel = frozenset((parse(a), parse(b)) for a, b in data["rel1"])
            bound = _json_int(data["bound"], "bound")
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ConditionShapeError(f"条件 JSON 格式不正确: {e}") from e
        return cls(support=support, color=color, rel=rel, bound=bound)


@dataclass(frozen=True)
class DeltaSystem:
    """Δ-system 演示结果.

    Attributes:
        indices: 子族在原族中的下标（按排序后的顺序）
        members: 子族中的条件，顺序同 indices
        root: 公共根 A
        certificates: 每对成员经 amalgamate 得到的共同扩张
    """

    indices: tuple[int, ...]
    members: tuple[Condition, ...]
    root: frozenset[Ordinal]
    certificates: tuple[Condition, ...] = ()

    @property
    def size(self) -> int:
        return len(self.members)
