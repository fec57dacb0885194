"""pcfflow - 有限条件 forcing 的构造与校验工具包.

用有限条件逐步构造一族集合 {B_α} 与颜色划分 {A_n}，并对结果做可有限验证的检查。

主要功能:
    - ordinal: ω^ω 以下的 Cantor 范式序数、解析与基本列
    - kernel: 条件、扩张关系、限制与 amalgamation，穷举比对与 Δ-system 演示
    - dense: AddOrdinal / RaiseU / Separate 三类稠密集
    - builder: 调度、chain 构造与结构读出
    - verify: 结构检查与随机定律检查

使用示例:
    from pcfflow import preset, run, extract, check_structure

    chain = run(preset("smoke"))
    report = check_structure(extract(chain), chain)
    assert report.passed
"""

__version__ = "0.1.0"

# 导出序数
from pcfflow.ordinal import Ordinal, format_ordinal, fund_seq, parse

# 导出条件内核
from pcfflow.kernel import (
    Condition,
    amalgamate,
    compat_oracle,
    delta_system_demo,
    empty,
    is_stronger,
    restrict,
    validate,
)

# 导出稠密集
from pcfflow.dense import AddOrdinal, RaiseU, Separate, meet, member

# 导出构造器
from pcfflow.builder import (
    Chain,
    PcfStructure,
    Schedule,
    extract,
    load_schedule,
    make_schedule,
    preset,
    run,
)

# 导出校验
from pcfflow.verify import Report, StructureVerifier, check_condition_laws, check_structure, render

# 导出异常
from pcfflow.exceptions import PcfFlowError

__all__ = [
    # 版本
    "__version__",
    # 序数
    "Ordinal",
    "parse",
    "format_ordinal",
    "fund_seq",
    # 条件内核
    "Condition",
    "empty",
    "validate",
    "is_stronger",
    "restrict",
    "amalgamate",
    "compat_oracle",
    "delta_system_demo",
    # 稠密集
    "AddOrdinal",
    "RaiseU",
    "Separate",
    "member",
    "meet",
    # 构造器
    "Schedule",
    "Chain",
    "PcfStructure",
    "make_schedule",
    "load_schedule",
    "preset",
    "run",
    "extract",
    # 校验
    "Report",
    "StructureVerifier",
    "check_structure",
    "check_condition_laws",
    "render",
    # 异常
    "PcfFlowError",
]
