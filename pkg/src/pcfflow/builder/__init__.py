"""
builder 模块 - 稠密集调度与条件链构造

主要组件:
- make_schedule / preset / load_schedule: 生成有限调度
- run: 从空条件起依次 meet，得到 Chain
- extract: 从 Chain 读出 PcfStructure（B_α、A_n、u 与审计表）
- validate_chain: 重放检查 Chain 的不变式

示例用法:
    >>> from pcfflow.builder import preset, run, extract
    >>> structure = extract(run(preset("smoke")))
    >>> structure.bound_u
    2
"""

from .exceptions import (
    BuilderError,
    ChainDefectError,
    ScheduleError,
    StructureDecodeError,
    UnknownPresetError,
)
from .models import (
    AuditEntry,
    Chain,
    ChainStep,
    PcfStructure,
    Schedule,
    ScheduleParams,
    canonical_json,
)
from .presets import PRESETS, preset
from .tool import extract, load_schedule, make_schedule, run, validate_chain

__all__ = [
    # 数据模型
    "Schedule",
    "ScheduleParams",
    "Chain",
    "ChainStep",
    "AuditEntry",
    "PcfStructure",
    "canonical_json",
    # 调度
    "make_schedule",
    "load_schedule",
    "preset",
    "PRESETS",
    # 构造与读出
    "run",
    "extract",
    "validate_chain",
    # 异常
    "BuilderError",
    "ScheduleError",
    "UnknownPresetError",
    "ChainDefectError",
    "StructureDecodeError",
]
