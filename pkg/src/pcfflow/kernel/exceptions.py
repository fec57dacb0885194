"""forcing 条件内核异常定义模块."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..exceptions import PcfFlowError

if TYPE_CHECKING:
    from .models import Violation


class KernelError(PcfFlowError):
    """内核基础异常."""

    pass


class ConditionShapeError(KernelError):
    """条件的表示本身不成立（color 定义域不等于 support、rel 对越界、负数等）.

    与 Violation 不同：Violation 是条件不变式的失败，作为返回值报告；
    ConditionShapeError 表示数据结构无法构成一个四元组。
    """

    pass


class AmalgamationPreconditionError(KernelError):
    """amalgamate 的前置条件不成立.

    Attributes:
        violations: 失败的子句及其证据
    """

    def __init__(self, message: str, violations: list[Violation] | None = None) -> None:
        super().__init__(message)
        self.violations = violations or []


class SearchGuardExceededError(KernelError):
    """穷举搜索的规模超过保护上限."""

    pass
