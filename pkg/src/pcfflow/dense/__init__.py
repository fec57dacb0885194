"""
dense 模块 - 三类稠密集

主要组件:
- AddOrdinal / RaiseU / Separate: 参数化的稠密集
- member: 成员判定
- meet: 构造属于稠密集且更强的条件
- separation_witnesses: 列出分离见证 β
"""

from .exceptions import DenseSetError, DenseSpecDecodeError, InvalidDenseSpecError
from .models import (
    AddOrdinal,
    DenseSetSpec,
    MeetResult,
    RaiseU,
    Separate,
    spec_from_dict,
)
from .tool import meet, member, separation_witnesses

__all__ = [
    # 数据模型
    "AddOrdinal",
    "RaiseU",
    "Separate",
    "DenseSetSpec",
    "MeetResult",
    "spec_from_dict",
    # 操作
    "member",
    "meet",
    "separation_witnesses",
    # 异常
    "DenseSetError",
    "InvalidDenseSpecError",
    "DenseSpecDecodeError",
]
