"""预置调度.

预置调度的参数在此冻结，验收数字（步数、见证）依赖它们保持不变。
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from ..ordinal import Ordinal, fund_seq
from .exceptions import UnknownPresetError
from .models import Schedule, SeparationTuple
from .tool import make_schedule

logger = logging.getLogger(__name__)

W = Ordinal.omega()

# w2-demo 的冻结参数
W2_DEMO_LIMITS = (W, Ordinal.omega(1, 2), Ordinal.omega(1, 3))
W2_DEMO_GAMMA_INDICES = (0, 2, 5)
W2_DEMO_ALPHA_CEILING = Ordinal.omega(1, 4)
W2_DEMO_SEPARATIONS = 100
W2_DEMO_COLORS = 5


def _block(base: Ordinal, count: int) -> list[Ordinal]:
    """base, base+1, …, base+(count-1)."""
    return [base + Ordinal.of(k) for k in range(count)]


def w2_demo_ordinals() -> list[Ordinal]:
    """40 个 ω² 以下的采样序数（升序）."""
    return sorted(
        _block(Ordinal(), 15)
        + _block(W, 10)
        + _block(Ordinal.omega(1, 2), 5)
        + _block(Ordinal.omega(1, 3), 5)
        + _block(Ordinal.omega(1, 4), 5)
    )


def w2_demo_separations(sample: list[Ordinal]) -> list[SeparationTuple]:
    """按固定规则生成 100 个分离元组."""
    tuples: list[SeparationTuple] = []
    for i in range(W2_DEMO_SEPARATIONS):
        lam = W2_DEMO_LIMITS[i % len(W2_DEMO_LIMITS)]
        alphas = [a for a in sample if lam <= a <= W2_DEMO_ALPHA_CEILING]
        alpha = alphas[(i * 7) % len(alphas)]
        gamma = fund_seq(lam, W2_DEMO_GAMMA_INDICES[(i // 3) % len(W2_DEMO_GAMMA_INDICES)])
        earlier = [x for x in sample if x < alpha]
        avoid = frozenset(earlier[(i * 5 + 3 * t) % len(earlier)] for t in range(i % 4))
        tuples.append((lam, alpha, gamma, avoid))
    return tuples


def smoke() -> Schedule:
    """三项冒烟调度: AddOrdinal(w), RaiseU(1), Separate(w, w, 2, {})."""
    return make_schedule([W], 1, [(W, W, Ordinal.of(2), frozenset())])


def w2_demo() -> Schedule:
    """141 项演示调度: 40 个 AddOrdinal，RaiseU(5)，100 个 Separate."""
    sample = w2_demo_ordinals()
    return make_schedule(sample, W2_DEMO_COLORS, w2_demo_separations(sample))


PRESETS: dict[str, Callable[[], Schedule]] = {
    "smoke": smoke,
    "w2-demo": w2_demo,
}


def preset(name: str) -> Schedule:
    """按名称取预置调度.

    Raises:
        UnknownPresetError: 名称未注册
    """
    factory = PRESETS.get(name)
    if factory is None:
        raise UnknownPresetError(f"unknown preset: {name!r}，可选: {sorted(PRESETS)}")
    logger.info(f"加载预置调度: {name}")
    return factory()
