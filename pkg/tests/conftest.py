"""测试公共工具."""

from __future__ import annotations

import pytest

from pcfflow.kernel import Condition
from pcfflow.ordinal import parse


def make_condition(
    colors: dict[str, int],
    edges: list[tuple[str, str]] = (),
    bound: int | None = None,
    reflexive: bool = True,
) -> Condition:
    """用字符串序数快速构造条件；默认补上自反对，bound 默认取最大颜色加一."""
    support = frozenset(parse(x) for x in colors)
    rel = {(parse(a), parse(b)) for a, b in edges}
    if reflexive:
        rel |= {(x, x) for x in support}
    if bound is None:
        bound = max(colors.values(), default=-1) + 1
    return Condition(
        support=support,
        color={parse(k): v for k, v in colors.items()},
        rel=frozenset(rel),
        bound=bound,
    )


@pytest.fixture
def cond():
    """make_condition 工厂."""
    return make_condition
