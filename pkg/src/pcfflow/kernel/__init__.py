"""
kernel 模块 - 有限条件 forcing 偏序

主要组件:
- Condition: 条件四元组 (S, π, b, u)
- validate / is_stronger / restrict: 条件校验、扩张关系与限制
- amalgamate: 截点 η 两侧条件的合并
- compat_oracle: 共同扩张的穷举判定
- delta_system_demo: Δ-system 兼容性的有限演示

示例用法:
    >>> from pcfflow.kernel import empty, validate
    >>> validate(empty())
    []
"""

from .delta import delta_system_demo
from .exceptions import (
    AmalgamationPreconditionError,
    ConditionShapeError,
    KernelError,
    SearchGuardExceededError,
)
from .models import (
    DELTA_MAX_FAMILY,
    ORACLE_MAX_SUPPORT,
    Condition,
    DeltaSystem,
    Violation,
    ViolationClause,
)
from .oracle import compat_oracle, is_compatible
from .tool import (
    amalgamate,
    empty,
    extension_violations,
    forced_color,
    forced_in_b,
    is_stronger,
    is_valid,
    restrict,
    trace_bound,
    validate,
)

__all__ = [
    # 数据模型
    "Condition",
    "Violation",
    "ViolationClause",
    "DeltaSystem",
    "ORACLE_MAX_SUPPORT",
    "DELTA_MAX_FAMILY",
    # 偏序操作
    "empty",
    "validate",
    "is_valid",
    "extension_violations",
    "is_stronger",
    "restrict",
    "amalgamate",
    # forcing 读法
    "forced_in_b",
    "forced_color",
    "trace_bound",
    # 穷举
    "compat_oracle",
    "is_compatible",
    "delta_system_demo",
    # 异常
    "KernelError",
    "ConditionShapeError",
    "AmalgamationPreconditionError",
    "SearchGuardExceededError",
]
