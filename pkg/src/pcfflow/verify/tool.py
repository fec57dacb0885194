"""结构校验核心实现模块.

StructureVerifier 对导出的结构运行全部检查；render 把报告渲染为文本表格或 JSON。
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from typing import Any

from ..builder import Chain, PcfStructure, Schedule, validate_chain
from ..ordinal import Ordinal, format_ordinal
from .exceptions import InconsistentInputError, UnknownFormatError
from .models import Coverage, Report, ReportFormat
from .rules import CheckContext, CheckEngine, StructureCheck

logger = logging.getLogger(__name__)


def _check_provenance(
    structure: PcfStructure, chain: Chain | None, schedule: Schedule | None
) -> None:
    if chain is not None:
        if structure.schedule_digest != chain.schedule_digest:
            raise InconsistentInputError("结构的 schedule_digest 与 chain 不一致")
        if structure.chain_len != len(chain.steps):
            raise InconsistentInputError(
                f"结构记录的 chain 长度 {structure.chain_len} 与 chain 步数 {len(chain.steps)} 不一致"
            )
        problems = validate_chain(chain)
        if problems:
            raise InconsistentInputError(f"chain 重放失败: {'; '.join(problems)}")
    if schedule is not None and schedule.digest() != structure.schedule_digest:
        raise InconsistentInputError("调度摘要与结构记录的 schedule_digest 不一致")


def _coverage(structure: PcfStructure, schedule: Schedule | None) -> Coverage:
    per_limit: Counter[str] = Counter()
    separations = schedule.separations() if schedule is not None else []
    for _, spec in separations:
        per_limit[format_ordinal(spec.lam)] += 1
    return Coverage(
        separations=len(separations),
        ordinals=len(structure.B),
        colors=structure.bound_u,
        per_limit=dict(sorted(per_limit.items())),
    )


class StructureVerifier:
    """结构校验器

    功能:
    - 核对结构与 chain/调度的来源记录，并重放 chain
    - 运行已注册的结构检查
    - 统计按 λ 的分离覆盖
    """

    def __init__(self, engine: CheckEngine | None = None):
        """初始化结构校验器

        Args:
            engine: 检查引擎，默认注册六项检查
        """
        self._engine = engine if engine is not None else CheckEngine()

    def verify(
        self,
        structure: PcfStructure,
        chain: Chain | None = None,
        schedule: Schedule | None = None,
    ) -> Report:
        """运行全部结构检查.

        没有 chain 时只运行不依赖 chain 的检查，其余检查列入 skipped。

        Args:
            structure: 待检查的结构
            chain: 生成结构的 chain
            schedule: 调度，默认取 chain.schedule

        Returns:
            Report

        Raises:
            InconsistentInputError: 结构与 chain/调度的来源记录不一致，或 chain 重放失败
        """
        _check_provenance(structure, chain, schedule)
        context = CheckContext(structure=structure, chain=chain, schedule=schedule)
        checks, skipped = self._engine.run(context)
        report = Report(
            checks=checks,
            coverage=_coverage(structure, context.effective_schedule),
            skipped=skipped,
        )
        logger.info(
            f"结构校验完成: {report.passed_count} 通过, {report.failed_count} 失败, "
            f"跳过 {len(skipped)} 项"
        )
        return report

    def register_custom_check(self, check: StructureCheck) -> None:
        """注册自定义检查

        Args:
            check: StructureCheck 实例
        """
        self._engine.register_check(check)
        logger.info(f"已注册自定义检查: {check.name}")


def check_structure(
    structure: PcfStructure,
    chain: Chain | None = None,
    schedule: Schedule | None = None,
) -> Report:
    """用默认检查校验结构，见 StructureVerifier.verify.

    没有 chain 时只运行 max、transitivity、partition，其余检查列入 skipped。
    """
    return StructureVerifier().verify(structure, chain, schedule)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Ordinal):
        return format_ordinal(value)
    if isinstance(value, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [_jsonable(x) for x in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_jsonable(x) for x in value]
    return value


def _render_text(report: Report) -> str:
    lines = [report.banner, ""]
    width = max((len(check.name) for check in report.checks), default=4)
    for check in report.checks:
        mark = "✓" if check.passed else "✗"
        line = f"{mark} {check.name.ljust(width)}  {check.message}"
        if not check.passed:
            line += f"\n    反例: {json.dumps(_jsonable(check.witness), ensure_ascii=False)}"
        lines.append(line)
    for name in report.skipped:
        lines.append(f"- {name.ljust(width)}  跳过（需要 chain）")

    coverage = report.coverage
    lines.append("")
    lines.append(
        f"覆盖: {coverage.separations} 个分离实例, {coverage.ordinals} 个序数, "
        f"{coverage.colors} 种颜色"
    )
    if coverage.per_limit:
        per_limit = ", ".join(f"{lam}: {count}" for lam, count in coverage.per_limit.items())
        lines.append(f"按 λ: {per_limit}")
    status = "通过" if report.passed else "失败"
    lines.append(f"结果: {status}（{report.passed_count} 通过, {report.failed_count} 失败）")
    return "\n".join(lines) + "\n"


def _render_json(report: Report) -> str:
    data = {
        "pass": report.passed,
        "checks": [
            {"name": check.name, "pass": check.passed, "witness": _jsonable(check.witness)}
            for check in report.checks
        ],
        "coverage": report.coverage.to_dict(),
        "failures": [
            {"name": check.name, "message": check.message, "witness": _jsonable(check.witness)}
            for check in report.failures
        ],
        "skipped": list(report.skipped),
        "note": report.banner,
    }
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def render(report: Report, fmt: ReportFormat | str = ReportFormat.TEXT) -> str:
    """渲染报告.

    Args:
        report: 校验报告
        fmt: "text" 或 "json"

    Returns:
        渲染后的文本（以换行结尾）

    Raises:
        UnknownFormatError: 未知格式
    """
    try:
        fmt = ReportFormat(fmt)
    except ValueError as e:
        raise UnknownFormatError(f"未知的报告格式: {fmt}，支持: text, json") from e
    if fmt is ReportFormat.JSON:
        return _render_json(report)
    return _render_text(report)
