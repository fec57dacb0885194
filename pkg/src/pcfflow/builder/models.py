"""chain 构造数据模型定义模块.

提供 chain 构造相关的数据模型，包括：
- ScheduleParams / Schedule: 有限的稠密集调度及其生成参数
- ChainStep / Chain: 递增条件链及其审计记录
- AuditEntry / PcfStructure: 从链末条件读出的 {B_α}、{A_n} 与 bound
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

from ..dense import DenseSetSpec, DenseSetError, Separate, spec_from_dict
from ..kernel import Condition, KernelError, empty
from ..ordinal import Ordinal, OrdinalError, format_ordinal, parse
from .exceptions import StructureDecodeError

# (λ, α, γ, avoid)
SeparationTuple = tuple[Ordinal, Ordinal, Ordinal, frozenset[Ordinal]]


def canonical_json(data: Any) -> str:
    """用于摘要的规范 JSON（键排序、紧凑分隔符）."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _separation_to_dict(item: SeparationTuple) -> dict[str, Any]:
    lam, alpha, gamma, avoid = item
    return {
        "lambda": format_ordinal(lam),
        "alpha": format_ordinal(alpha),
        "gamma": format_ordinal(gamma),
        "avoid": [format_ordinal(x) for x in sorted(avoid)],
    }


def separation_from_dict(data: dict[str, Any]) -> SeparationTuple:
    return (
        parse(data["lambda"]),
        parse(data["alpha"]),
        parse(data["gamma"]),
        frozenset(parse(x) for x in data.get("avoid", [])),
    )


@dataclass(frozen=True)
class ScheduleParams:
    """调度的生成参数，随结果一同导出作为来源记录.

    Attributes:
        ordinals: 采样的序数
        colors: 颜色数 N（RaiseU 的目标）
        separations: 分离元组 (λ, α, γ, avoid)，保持给定顺序
    """

    ordinals: tuple[Ordinal, ...] = ()
    colors: int = 0
    separations: tuple[SeparationTuple, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "ordinals": [format_ordinal(x) for x in self.ordinals],
            "colors": self.colors,
            "separations": [_separation_to_dict(s) for s in self.separations],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ScheduleParams:
        return cls(
            ordinals=tuple(parse(x) for x in data.get("ordinals", [])),
            colors=int(data.get("colors", 0)),
            separations=tuple(separation_from_dict(s) for s in data.get("separations", [])),
        )


@dataclass(frozen=True)
class Schedule:
    """有限的稠密集调度.

    Attributes:
        items: 按顺序 meet 的稠密集
        params: 生成参数
    """

    items: tuple[DenseSetSpec, ...] = ()
    params: ScheduleParams = field(default_factory=ScheduleParams)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[DenseSetSpec]:
        return iter(self.items)

    def separations(self) -> list[tuple[int, Separate]]:
        """(步号, Separate) 列表."""
        return [(i, s) for i, s in enumerate(self.items) if isinstance(s, Separate)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "items": [spec.to_dict() for spec in self.items],
            "params": self.params.to_dict(),
        }

    def digest(self) -> str:
        """序列化调度的 sha256 摘要."""
        return hashlib.sha256(canonical_json(self.to_dict()).encode("utf-8")).hexdigest()

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Schedule:
        """从 {"items", "params"} 形式还原调度.

        Raises:
            StructureDecodeError: JSON 格式不正确
        """
        try:
            return cls(
                items=tuple(spec_from_dict(item) for item in data["items"]),
                params=ScheduleParams.from_dict(data.get("params", {})),
            )
        except (KeyError, TypeError, ValueError, AttributeError, OrdinalError, DenseSetError) as e:
            raise StructureDecodeError(f"调度 JSON 格式不正确: {e}") from e


@dataclass(frozen=True)
class ChainStep:
    """chain 中的一步.

    Attributes:
        index: 步号（从 0 开始，对应调度中的位置）
        spec: 本步 meet 的稠密集
        condition: meet 之后的条件
        witness: Separate 的见证 β
    """

    index: int
    spec: DenseSetSpec
    condition: Condition
    witness: Ordinal | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "spec": self.spec.to_dict(),
            "condition": self.condition.to_dict(),
            "witness": None if self.witness is None else format_ordinal(self.witness),
        }


@dataclass(frozen=True)
class Chain:
    """递增条件链（generic filter 的有限片段）.

    Attributes:
        schedule: 生成本链的调度
        steps: 每一步的记录
        final: 末条件；空链时为空条件
    """

    schedule: Schedule
    steps: tuple[ChainStep, ...] = ()
    final: Condition = field(default_factory=empty)

    @property
    def schedule_digest(self) -> str:
        return self.schedule.digest()

    def __len__(self) -> int:
        return len(self.steps)

    def witnesses(self) -> list[tuple[int, Ordinal]]:
        return [(s.index, s.witness) for s in self.steps if s.witness is not None]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schedule_digest": self.schedule_digest,
            "schedule": self.schedule.to_dict(),
            "steps": [step.to_dict() for step in self.steps],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Chain:
        """从 chain 文件还原.

        Raises:
            StructureDecodeError: 格式不正确，或摘要与内嵌调度不符
        """
        if not isinstance(data, dict):
            raise StructureDecodeError(f"chain 文件必须是 JSON 对象，当前为 {type(data).__name__}")
        schedule = Schedule.from_dict(data.get("schedule", {}))
        try:
            steps = tuple(
                ChainStep(
                    index=int(item["index"]),
                    spec=spec_from_dict(item["spec"]),
                    condition=Condition.from_dict(item["condition"]),
                    witness=None if item.get("witness") is None else parse(item["witness"]),
                )
                for item in data["steps"]
            )
        except (
            KeyError,
            TypeError,
            ValueError,
            AttributeError,
            OrdinalError,
            DenseSetError,
            KernelError,
        ) as e:
            raise StructureDecodeError(f"chain JSON 格式不正确: {e}") from e
        digest = data.get("schedule_digest")
        if digest is not None and digest != schedule.digest():
            raise StructureDecodeError("chain 文件中的 schedule_digest 与内嵌调度不符")
        final = steps[-1].condition if steps else empty()
        return cls(schedule=schedule, steps=steps, final=final)


@dataclass(frozen=True)
class AuditEntry:
    """(α, n) 的审计记录：首个 α 在 support 中且 bound > n 的步及其 support 快照."""

    step: int
    snapshot: frozenset[Ordinal]


@dataclass(frozen=True)
class PcfStructure:
    """从 chain 读出的结构.

    Attributes:
        bound_u: 末条件的 bound
        B: α ↦ {β : rel(α,β)=1}
        classes: n ↦ A_n = color⁻¹(n)
        audit: (α, n) ↦ AuditEntry
        chain_len: chain 步数
        witnesses: (步号, β) 列表
        schedule_digest: 调度摘要
    """

    bound_u: int = 0
    B: dict[Ordinal, frozenset[Ordinal]] = field(default_factory=dict)
    classes: dict[int, frozenset[Ordinal]] = field(default_factory=dict)
    audit: dict[tuple[Ordinal, int], AuditEntry] = field(default_factory=dict)
    chain_len: int = 0
    witnesses: tuple[tuple[int, Ordinal], ...] = ()
    schedule_digest: str = ""

    @property
    def support(self) -> frozenset[Ordinal]:
        return frozenset(self.B)

    @property
    def color(self) -> dict[Ordinal, int]:
        """α ↦ n（同一元素出现在多个类中时取编号最小的类）."""
        mapping: dict[Ordinal, int] = {}
        for n in sorted(self.classes, reverse=True):
            for alpha in self.classes[n]:
                mapping[alpha] = n
        return mapping

    def A(self, n: int) -> frozenset[Ordinal]:
        return self.classes.get(n, frozenset())

    def to_export(self) -> dict[str, Any]:
        """结构导出 JSON（序数升序，B 列表升序）."""
        return {
            "bound_u": self.bound_u,
            "B": {
                format_ordinal(alpha): [format_ordinal(x) for x in sorted(self.B[alpha])]
                for alpha in sorted(self.B)
            },
            "A": {
                str(n): [format_ordinal(x) for x in sorted(self.classes[n])]
                for n in sorted(self.classes)
            },
            "chain_len": self.chain_len,
            "witnesses": [
                {"step": step, "beta": format_ordinal(beta)} for step, beta in self.witnesses
            ],
            "schedule_digest": self.schedule_digest,
        }

    @classmethod
    def from_export(cls, data: dict[str, Any]) -> PcfStructure:
        """从导出 JSON 还原结构（不含审计表，审计需要 chain）.

        Raises:
            StructureDecodeError: 格式不正确或缺少 schedule_digest
        """
        try:
            digest = data["schedule_digest"]
            if not isinstance(digest, str) or not digest:
                raise ValueError("schedule_digest 缺失")
            return cls(
                bound_u=int(data["bound_u"]),
                B={
                    parse(alpha): frozenset(parse(x) for x in members)
                    for alpha, members in data["B"].items()
                },
                classes={
                    int(n): frozenset(parse(x) for x in members)
                    for n, members in data["A"].items()
                },
                chain_len=int(data["chain_len"]),
                witnesses=tuple(
                    (int(item["step"]), parse(item["beta"])) for item in data["witnesses"]
                ),
                schedule_digest=digest,
            )
        except (KeyError, TypeError, ValueError, AttributeError, OrdinalError) as e:
            raise StructureDecodeError(f"结构导出 JSON 格式不正确: {e}") from e
