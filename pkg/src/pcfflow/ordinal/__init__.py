"""
ordinal 模块 - ω^ω 以下的 Cantor 范式序数

主要组件:
- Ordinal: 不可变序数值对象
- parse / format_ordinal: 表达式解析与格式化
- compare / successor / add: 比较与算术
- fund_seq / cofinal_index: 极限序数的标准基本列

示例用法:
    >>> from pcfflow.ordinal import parse, fund_seq
    >>> str(fund_seq(parse("w^2"), 4))
    'w*4'
"""

from .exceptions import (
    InvalidOrdinalError,
    NotLimitOrdinalError,
    OrdinalError,
    OrdinalParseError,
)
from .models import (
    Order,
    Ordinal,
    add,
    cofinal_index,
    compare,
    fund_seq,
    successor,
)
from .parser import format_ordinal, ordinal, parse

__all__ = [
    # 数据模型
    "Ordinal",
    "Order",
    # 运算
    "compare",
    "successor",
    "add",
    "fund_seq",
    "cofinal_index",
    # 解析
    "parse",
    "format_ordinal",
    "ordinal",
    # 异常
    "OrdinalError",
    "OrdinalParseError",
    "InvalidOrdinalError",
    "NotLimitOrdinalError",
]
