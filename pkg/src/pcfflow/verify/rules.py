"""结构检查规则.

每条规则检查一项可有限验证的性质，失败时给出具体反例。依赖 chain 的规则
（分离、迹审计、理想逃逸）在缺少 chain 时由 CheckEngine 跳过。
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..builder import Chain, PcfStructure, Schedule
from ..ordinal import Ordinal
from .models import CheckResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckContext:
    """检查上下文.

    Attributes:
        structure: 待检查的结构
        chain: 生成结构的 chain（可选）
        schedule: 调度（可选，默认取 chain 的调度）
    """

    structure: PcfStructure
    chain: Chain | None = None
    schedule: Schedule | None = None

    @property
    def effective_schedule(self) -> Schedule | None:
        if self.schedule is not None:
            return self.schedule
        return self.chain.schedule if self.chain is not None else None


class StructureCheck(ABC):
    """检查规则基类"""

    @property
    @abstractmethod
    def name(self) -> str:
        """检查名称"""
        pass

    @property
    def requires_chain(self) -> bool:
        return False

    @abstractmethod
    def check(self, context: CheckContext) -> CheckResult:
        """运行检查"""
        pass

    def _result(self, failures: list, evidence=None, message: str = "") -> CheckResult:
        if failures:
            return CheckResult(self.name, False, witness=failures, message=message)
        return CheckResult(self.name, True, evidence=evidence, message=message)


class MaxCheck(StructureCheck):
    """max B_α = α"""

    @property
    def name(self) -> str:
        return "max"

    def check(self, context: CheckContext) -> CheckResult:
        failures = []
        for alpha, members in sorted(context.structure.B.items()):
            top = max(members) if members else None
            if top != alpha:
                failures.append({"alpha": alpha, "max": top})
        return self._result(failures, message="max(B[α]) = α")


class TransitivityCheck(StructureCheck):
    """α ∈ B_β ⇒ B_α ⊆ B_β"""

    @property
    def name(self) -> str:
        return "transitivity"

    def check(self, context: CheckContext) -> CheckResult:
        B = context.structure.B
        failures = []
        for beta, members in sorted(B.items()):
            for alpha in sorted(members):
                missing = B.get(alpha, frozenset()) - members
                if missing:
                    failures.append({"alpha": alpha, "beta": beta, "missing": sorted(missing)})
        return self._result(failures, message="α ∈ B[β] ⇒ B[α] ⊆ B[β]")


class PartitionCheck(StructureCheck):
    """A_n 两两不交、覆盖 support，且颜色都小于 bound_u"""

    @property
    def name(self) -> str:
        return "partition"

    def check(self, context: CheckContext) -> CheckResult:
        structure = context.structure
        failures = []
        seen: dict[Ordinal, int] = {}
        for n, members in sorted(structure.classes.items()):
            if members and not 0 <= n < structure.bound_u:
                failures.append({"kind": "color-range", "n": n, "bound_u": structure.bound_u})
            for alpha in sorted(members):
                if alpha in seen:
                    failures.append({"kind": "overlap", "ordinal": alpha, "classes": [seen[alpha], n]})
                else:
                    seen[alpha] = n
        covered = frozenset(seen)
        uncovered = structure.support - covered
        if uncovered:
            failures.append({"kind": "uncovered", "ordinals": sorted(uncovered)})
        extra = covered - structure.support
        if extra:
            failures.append({"kind": "outside-support", "ordinals": sorted(extra)})
        return self._result(failures, message="A_n 为 support 的划分且颜色 < bound_u")


class SeparationCheck(StructureCheck):
    """每个已调度的 Separate 都有 β ∈ B_α ∩ [γ, λ) 且 β 不属于任何 B_{α_i}"""

    @property
    def name(self) -> str:
        return "separation"

    @property
    def requires_chain(self) -> bool:
        return True

    def check(self, context: CheckContext) -> CheckResult:
        B = context.structure.B
        schedule = context.effective_schedule
        recorded = {step.index: step.witness for step in context.chain.steps}
        failures = []
        evidence = []
        for index, spec in schedule.separations():
            candidates = [
                beta
                for beta in sorted(B.get(spec.alpha, frozenset()))
                if spec.gamma <= beta < spec.lam
                and all(beta not in B.get(a, frozenset()) for a in spec.avoid)
            ]
            witness = recorded.get(index)
            if not candidates:
                failures.append({"step": index, "spec": str(spec), "reason": "没有分离见证"})
            elif witness not in candidates:
                failures.append(
                    {"step": index, "spec": str(spec), "recorded": witness, "reason": "记录的见证不成立"}
                )
            else:
                evidence.append({"step": index, "beta": witness})
        return self._result(failures, evidence=evidence, message="已调度的分离实例均有见证")


class TraceAuditCheck(StructureCheck):
    """B_α ∩ A_n 包含于审计步的 support 快照"""

    @property
    def name(self) -> str:
        return "trace-audit"

    @property
    def requires_chain(self) -> bool:
        return True

    def check(self, context: CheckContext) -> CheckResult:
        structure = context.structure
        failures = []
        for alpha, members in sorted(structure.B.items()):
            for n in range(structure.bound_u):
                entry = structure.audit.get((alpha, n))
                if entry is None:
                    continue
                leak = (members & structure.A(n)) - entry.snapshot
                if leak:
                    failures.append(
                        {"alpha": alpha, "n": n, "step": entry.step, "leak": sorted(leak)}
                    )
        return self._result(failures, message="B[α] ∩ A_n ⊆ 审计快照")


class IdealEscapeCheck(StructureCheck):
    """理想生成元（调度中用到的避开集）在每个 A_n 上的迹都有经过认证的有限上界"""

    @property
    def name(self) -> str:
        return "ideal-escape"

    @property
    def requires_chain(self) -> bool:
        return True

    def check(self, context: CheckContext) -> CheckResult:
        structure = context.structure
        generators: list[frozenset[Ordinal]] = []
        for _, spec in context.effective_schedule.separations():
            if spec.avoid and spec.avoid not in generators:
                generators.append(spec.avoid)

        failures = []
        for avoid in generators:
            for n in range(structure.bound_u):
                total = 0
                union: set[Ordinal] = set()
                for alpha in sorted(avoid):
                    if alpha not in structure.B:
                        failures.append({"generator": alpha, "n": n, "reason": "不在 support 中"})
                        continue
                    entry = structure.audit.get((alpha, n))
                    if entry is None:
                        failures.append({"generator": alpha, "n": n, "reason": "迹未经认证"})
                        continue
                    trace = structure.B[alpha] & structure.A(n)
                    if len(trace) > len(entry.snapshot):
                        failures.append(
                            {"generator": alpha, "n": n, "reason": "迹超出快照规模", "trace": sorted(trace)}
                        )
                    total += len(trace)
                    union |= trace
                if len(union) > total:
                    failures.append({"generators": sorted(avoid), "n": n, "reason": "并集超出各项之和"})
        return self._result(
            failures,
            evidence={"generators": len(generators)},
            message="每个理想生成元在每个 A_n 上的迹有限",
        )


class CheckEngine:
    """检查引擎"""

    def __init__(self):
        self._checks: list[StructureCheck] = []
        self._register_default_checks()

    def _register_default_checks(self) -> None:
        """注册默认检查"""
        self._checks = [
            MaxCheck(),
            TransitivityCheck(),
            SeparationCheck(),
            TraceAuditCheck(),
            PartitionCheck(),
            IdealEscapeCheck(),
        ]

    def register_check(self, check: StructureCheck) -> None:
        """注册自定义检查"""
        if not isinstance(check, StructureCheck):
            raise ValueError(f"检查必须是 StructureCheck 的子类，当前类型: {type(check)}")
        self._checks.append(check)

    def run(self, context: CheckContext) -> tuple[list[CheckResult], list[str]]:
        """运行所有检查

        Returns:
            (按名称排序的检查结果, 被跳过的检查名称)
        """
        results: list[CheckResult] = []
        skipped: list[str] = []
        for check in self._checks:
            if check.requires_chain and context.chain is None:
                skipped.append(check.name)
                continue
            try:
                results.append(check.check(context))
            except Exception as e:
                # 单项检查异常记为失败，不影响其他检查
                logger.warning(f"检查 {check.name} 执行失败: {e}")
                results.append(CheckResult(check.name, False, witness=str(e), message="检查执行异常"))
        return sorted(results, key=lambda r: r.name), sorted(skipped)

    def get_checks(self) -> list[StructureCheck]:
        """获取所有已注册的检查"""
        return self._checks.copy()
