"""稠密集数据模型定义模块.

三类稠密集:
- AddOrdinal(α): S_p 含 α 的条件
- RaiseU(n): u_p >= n 的条件
- Separate(λ, α, γ, avoid): 存在 β ∈ [γ, λ) 使 β ∈ B_α 且 β 不属于任何 B_{α_i}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, ClassVar

from ..kernel import Condition
from ..ordinal import Ordinal, OrdinalError, format_ordinal, parse
from .exceptions import DenseSpecDecodeError, InvalidDenseSpecError


@dataclass(frozen=True)
class AddOrdinal:
    """S_p 含 alpha 的条件构成的稠密集."""

    kind: ClassVar[str] = "add"

    alpha: Ordinal

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "a": format_ordinal(self.alpha)}

    def __str__(self) -> str:
        return f"AddOrdinal({self.alpha})"


@dataclass(frozen=True)
class RaiseU:
    """u_p >= n 的条件构成的稠密集."""

    kind: ClassVar[str] = "raise_u"

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidDenseSpecError(f"RaiseU 的 n 必须为自然数，当前值: {self.n}")

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "n": self.n}

    def __str__(self) -> str:
        return f"RaiseU({self.n})"


@dataclass(frozen=True)
class Separate:
    """分离稠密集.

    Attributes:
        lam: 极限序数 λ
        alpha: α >= λ
        gamma: γ < λ
        avoid: 每个元素都小于 α 的有限集合 {α_1, …, α_k}

    Raises:
        InvalidDenseSpecError: 参数违反上述约束，消息指明哪一条
    """

    kind: ClassVar[str] = "separate"

    lam: Ordinal
    alpha: Ordinal
    gamma: Ordinal
    avoid: frozenset[Ordinal] = frozenset()

    def __post_init__(self) -> None:
        """校验分离参数."""
        if not self.lam.is_limit:
            raise InvalidDenseSpecError(f"λ={self.lam} 必须是极限序数")
        if self.alpha < self.lam:
            raise InvalidDenseSpecError(f"要求 α >= λ，当前 α={self.alpha}, λ={self.lam}")
        if not self.gamma < self.lam:
            raise InvalidDenseSpecError(f"要求 γ < λ，当前 γ={self.gamma}, λ={self.lam}")
        too_big = sorted(x for x in self.avoid if not x < self.alpha)
        if too_big:
            raise InvalidDenseSpecError(
                f"避开集元素必须小于 α={self.alpha}，越界: {[str(x) for x in too_big]}"
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "lambda": format_ordinal(self.lam),
            "alpha": format_ordinal(self.alpha),
            "gamma": format_ordinal(self.gamma),
            "avoid": [format_ordinal(x) for x in sorted(self.avoid)],
        }

    def __str__(self) -> str:
        avoid = ",".join(str(x) for x in sorted(self.avoid))
        return f"Separate({self.lam}, {self.alpha}, {self.gamma}, {{{avoid}}})"


# 所有稠密集类型的联合类型
DenseSetSpec = AddOrdinal | RaiseU | Separate


@dataclass(frozen=True)
class MeetResult:
    """meet 的结果.

    Attributes:
        result: 属于该稠密集且强于输入的条件
        witness: Separate 选出的 β；其余类型为 None
    """

    result: Condition
    witness: Ordinal | None = None


def spec_from_dict(data: dict[str, Any]) -> DenseSetSpec:
    """从 JSON 对象还原稠密集.

    Raises:
        DenseSpecDecodeError: kind 未知或字段缺失
        InvalidDenseSpecError: 参数违反约束
    """
    try:
        kind = data["kind"]
        if kind == AddOrdinal.kind:
            return AddOrdinal(parse(data["a"]))
        if kind == RaiseU.kind:
            return RaiseU(int(data["n"]))
        if kind == Separate.kind:
            return Separate(
                lam=parse(data["lambda"]),
                alpha=parse(data["alpha"]),
                gamma=parse(data["gamma"]),
                avoid=frozenset(parse(x) for x in data.get("avoid", [])),
            )
    except (KeyError, TypeError, ValueError, AttributeError, OrdinalError) as e:
        raise DenseSpecDecodeError(f"稠密集 JSON 格式不正确: {e}") from e
    raise DenseSpecDecodeError(f"未知的稠密集类型: {kind!r}")
