"""
verify 模块 - 结构检查与随机定律检查

主要组件:
- StructureVerifier / check_structure: 对导出结构运行 max、transitivity、separation、trace-audit、
  partition、ideal-escape 六项检查
- check_condition_laws: 在随机条件上检查偏序与 amalgamation 的定律
- render: 文本或 JSON 报告
- CheckEngine / StructureCheck: 检查规则引擎

示例用法:
    >>> from pcfflow.builder import preset, run, extract
    >>> from pcfflow.verify import check_structure
    >>> chain = run(preset("smoke"))
    >>> check_structure(extract(chain), chain).passed
    True
"""

from .exceptions import (
    InconsistentInputError,
    LawSuiteConfigError,
    UnknownFormatError,
    VerifyError,
)
from .laws import LAW_NAMES, check_condition_laws, random_condition
from .models import REPORT_BANNER, CheckResult, Coverage, LawSuiteConfig, Report, ReportFormat
from .rules import (
    CheckContext,
    CheckEngine,
    IdealEscapeCheck,
    MaxCheck,
    PartitionCheck,
    SeparationCheck,
    StructureCheck,
    TraceAuditCheck,
    TransitivityCheck,
)
from .tool import StructureVerifier, check_structure, render

__all__ = [
    # 数据模型
    "CheckResult",
    "Coverage",
    "Report",
    "ReportFormat",
    "LawSuiteConfig",
    "REPORT_BANNER",
    # 检查
    "StructureVerifier",
    "check_structure",
    "check_condition_laws",
    "random_condition",
    "LAW_NAMES",
    "render",
    # 规则
    "CheckContext",
    "CheckEngine",
    "StructureCheck",
    "MaxCheck",
    "TransitivityCheck",
    "SeparationCheck",
    "TraceAuditCheck",
    "PartitionCheck",
    "IdealEscapeCheck",
    # 异常
    "VerifyError",
    "InconsistentInputError",
    "UnknownFormatError",
    "LawSuiteConfigError",
]
