"""Cantor 范式序数数据模型.

只表示 ω^ω 以下的序数：每个序数是 (指数, 系数) 项的有限序列，
指数为自然数且严格递减，系数为正整数，空序列表示 0。
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from .exceptions import InvalidOrdinalError, NotLimitOrdinalError

Term = tuple[int, int]


class Order(str, Enum):
    """比较结果."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """ω^ω 以下的序数（Cantor 范式）.

    Attributes:
        terms: (exponent, coefficient) 项序列，指数严格递减

    Examples:
        >>> Ordinal(((2, 3), (1, 1), (0, 4)))  # w^2*3+w+4
        >>> Ordinal.of(5) < Ordinal.omega()
        True
    """

    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        """校验 Cantor 范式的规范性."""
        previous: int | None = None
        for exponent, coefficient in self.terms:
            if exponent < 0:
                raise InvalidOrdinalError(f"指数必须为自然数，当前值: {exponent}")
            if coefficient < 1:
                raise InvalidOrdinalError(f"系数必须 >= 1，当前值: {coefficient}")
            if previous is not None and exponent >= previous:
                raise InvalidOrdinalError(
                    f"指数必须严格递减: {previous} 之后出现 {exponent}"
                )
            previous = exponent

    @classmethod
    def of(cls, n: int) -> Ordinal:
        """自然数 n 对应的有限序数."""
        if n < 0:
            raise InvalidOrdinalError(f"有限序数不能为负数: {n}")
        return cls(((0, n),)) if n else cls()

    @classmethod
    def omega(cls, exponent: int = 1, coefficient: int = 1) -> Ordinal:
        """单项序数 ω^exponent·coefficient."""
        return cls(((exponent, coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_limit(self) -> bool:
        """非 0 且没有指数为 0 的项（0 既不是极限也不是后继）."""
        return bool(self.terms) and self.terms[-1][0] > 0

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0] == 0

    @property
    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0] == 0

    @property
    def classification(self) -> str:
        """返回 "zero" | "successor" | "limit"."""
        if self.is_zero:
            return "zero"
        return "limit" if self.is_limit else "successor"

    def compare(self, other: Ordinal) -> Order:
        return compare(self, other)

    def successor(self) -> Ordinal:
        return successor(self)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        # 从首项开始按 (指数, 系数) 字典序比较，恰好是序数序
        return self.terms < other.terms

    def __add__(self, other: object) -> Ordinal:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return add(self, other)

    def __str__(self) -> str:
        from .parser import format_ordinal

        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


def compare(a: Ordinal, b: Ordinal) -> Order:
    """全序比较."""
    if a.terms == b.terms:
        return Order.EQUAL
    return Order.LESS if a.terms < b.terms else Order.GREATER


def successor(x: Ordinal) -> Ordinal:
    """x + 1."""
    if x.terms and x.terms[-1][0] == 0:
        return Ordinal(x.terms[:-1] + ((0, x.terms[-1][1] + 1),))
    return Ordinal(x.terms + ((0, 1),))


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Cantor 范式下的序数加法（不满足交换律）.

    a 中指数小于 b 首项指数的项被吸收；指数相等时系数相加。
    """
    if b.is_zero:
        return a
    lead_exponent, lead_coefficient = b.terms[0]
    head = [term for term in a.terms if term[0] > lead_exponent]
    same = [term for term in a.terms if term[0] == lead_exponent]
    if same:
        merged = (lead_exponent, same[0][1] + lead_coefficient)
    else:
        merged = (lead_exponent, lead_coefficient)
    return Ordinal(tuple(head) + (merged,) + b.terms[1:])


def fund_seq(limit: Ordinal, n: int) -> Ordinal:
    """极限序数的标准基本列的第 n 项.

    记 limit = ρ + ω^e·c（末项 e >= 1）:
    - e == 1: ρ + ω·(c-1) + n
    - e >= 2: ρ + ω^e·(c-1) + ω^(e-1)·n

    Raises:
        NotLimitOrdinalError: limit 不是极限序数
    """
    if not limit.is_limit:
        raise NotLimitOrdinalError(f"{limit} 不是极限序数")
    if n < 0:
        raise ValueError(f"基本列下标必须为自然数，当前值: {n}")
    exponent, coefficient = limit.terms[-1]
    terms = list(limit.terms[:-1])
    if coefficient > 1:
        terms.append((exponent, coefficient - 1))
    if n:
        terms.append((exponent - 1, n))
    return Ordinal(tuple(terms))


def cofinal_index(limit: Ordinal, mu: Ordinal) -> int:
    """最小的 n 使 fund_seq(limit, n) >= mu（要求 mu < limit）.

    mu 中任意系数加一即可越过 mu，因此搜索在有限步内结束。
    """
    if not limit.is_limit:
        raise NotLimitOrdinalError(f"{limit} 不是极限序数")
    if not mu < limit:
        raise ValueError(f"{mu} 不小于 {limit}，基本列无法越过")
    ceiling = max((coefficient for _, coefficient in mu.terms), default=0) + 1
    for n in range(ceiling + 1):
        if fund_seq(limit, n) >= mu:
            return n
    raise AssertionError(f"基本列在 {ceiling} 步内未越过 {mu}")
