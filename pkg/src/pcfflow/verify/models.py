"""结构校验数据模型定义模块."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .exceptions import LawSuiteConfigError

# 报告横幅：有限演示无法覆盖的部分
REPORT_BANNER = (
    "有限调度只认证已调度的实例：分离性质按调度中的 (λ, α, γ, avoid) 逐一检查；"
    "理想逃逸只检查其组合核心（理想生成元在每个 A_n 上的迹有限且有界），"
    "完整推论涉及不可数集合，不在本工具范围内。"
)


class ReportFormat(str, Enum):
    """报告输出格式."""

    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class CheckResult:
    """单项检查结果.

    Attributes:
        name: 检查名称
        passed: 是否通过
        witness: 失败时的具体反例（序数、序对、三元组或其列表）
        evidence: 通过时的附加信息（如分离见证）
        message: 可读说明
    """

    name: str
    passed: bool
    witness: Any = None
    evidence: Any = None
    message: str = ""


@dataclass
class Coverage:
    """检查覆盖的规模.

    Attributes:
        separations: 检查过的分离实例数
        ordinals: 结构 support 的大小
        colors: bound_u
        per_limit: λ ↦ 该 λ 下的分离实例数
    """

    separations: int = 0
    ordinals: int = 0
    colors: int = 0
    per_limit: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "separations": self.separations,
            "ordinals": self.ordinals,
            "colors": self.colors,
            "per_limit": dict(self.per_limit),
        }


@dataclass
class Report:
    """校验报告.

    Attributes:
        checks: 按名称排序的检查结果
        coverage: 覆盖规模
        skipped: 因缺少 chain 而跳过的检查
        banner: 范围说明
    """

    checks: list[CheckResult] = field(default_factory=list)
    coverage: Coverage = field(default_factory=Coverage)
    skipped: list[str] = field(default_factory=list)
    banner: str = REPORT_BANNER

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def passed_count(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def failed_count(self) -> int:
        return len(self.checks) - self.passed_count

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> CheckResult | None:
        """按名称取检查结果."""
        return next((check for check in self.checks if check.name == name), None)

    @property
    def exit_code(self) -> int:
        """0 表示全部通过，1 表示存在失败."""
        return 0 if self.passed else 1


@dataclass
class LawSuiteConfig:
    """随机定律检查配置.

    Attributes:
        samples: 随机条件的数量，必须 >= 0
        instances: amalgamation 实例的数量，None 表示与 samples 相同
        seed: 随机种子
        max_support: 随机条件的最大 support 规模
        oracle_max_support: 运行穷举比对的 S_p ∪ S_q 规模上限
        max_exponent: 随机序数的最大指数
        max_coefficient: 随机序数的最大系数

    Raises:
        LawSuiteConfigError: 参数不合法
    """

    samples: int = 1000
    instances: int | None = None
    seed: int = 42
    max_support: int = 6
    oracle_max_support: int = 6
    max_exponent: int = 2
    max_coefficient: int = 4

    def __post_init__(self) -> None:
        """校验配置参数."""
        if self.samples < 0:
            raise LawSuiteConfigError(f"samples 必须 >= 0，当前值: {self.samples}")
        if self.instances is not None and self.instances < 0:
            raise LawSuiteConfigError(f"instances 必须 >= 0，当前值: {self.instances}")
        if self.max_support < 1:
            raise LawSuiteConfigError(f"max_support 必须 >= 1，当前值: {self.max_support}")
        if self.oracle_max_support < 0:
            raise LawSuiteConfigError(
                f"oracle_max_support 必须 >= 0，当前值: {self.oracle_max_support}"
            )
        if self.max_exponent < 1 or self.max_coefficient < 1:
            raise LawSuiteConfigError("max_exponent 与 max_coefficient 必须 >= 1")

    @property
    def amalgamation_instances(self) -> int:
        return self.samples if self.instances is None else self.instances
