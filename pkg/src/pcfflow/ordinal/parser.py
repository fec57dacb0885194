"""序数表达式解析与格式化模块.

文法（不允许空白）::

    ordinal := "0" | term ("+" term)*
    term    := "w" ("^" nat)? ("*" nat)? | nat
    nat     := [1-9][0-9]*

指数必须严格递减；"w" 等价于 w^1*1；裸自然数是指数为 0 的项，只能出现在末尾。
"""

from __future__ import annotations

import re

from .exceptions import OrdinalParseError
from .models import Ordinal

# 宽松匹配一个项，数字的合法性（前导 0、为 0）在匹配后单独报告位置
_TERM_PATTERN = re.compile(r"w(?:\^(?P<exp>\d+))?(?:\*(?P<coef>\d+))?|(?P<nat>\d+)")


def _read_nat(match: re.Match[str], group: str, text: str) -> int:
    """读取项中的自然数，拒绝 0 和前导 0."""
    raw = match.group(group)
    position = match.start(group)
    if raw.startswith("0"):
        reason = "系数/指数不能为 0" if raw == "0" else "自然数不能有前导 0"
        raise OrdinalParseError(reason, text, position)
    return int(raw)


def parse(text: str) -> Ordinal:
    """解析序数表达式为规范的 Ordinal.

    Args:
        text: 序数表达式，如 "w^2*3+w+4"

    Returns:
        Ordinal 对象

    Raises:
        OrdinalParseError: 语法错误或非规范输入（指数非严格递减、系数为 0）

    Examples:
        >>> parse("w^2*3+w+4").terms
        ((2, 3), (1, 1), (0, 4))
    """
    if text == "0":
        return Ordinal()
    if not text:
        raise OrdinalParseError("表达式为空", text, 0)

    terms: list[tuple[int, int]] = []
    position = 0
    while True:
        match = _TERM_PATTERN.match(text, position)
        if match is None:
            found = text[position] if position < len(text) else "结尾"
            raise OrdinalParseError(f"此处需要一个项，实际为 {found!r}", text, position)

        if match.group("nat") is not None:
            term = (0, _read_nat(match, "nat", text))
        else:
            exponent = _read_nat(match, "exp", text) if match.group("exp") else 1
            coefficient = _read_nat(match, "coef", text) if match.group("coef") else 1
            term = (exponent, coefficient)

        if terms and term[0] >= terms[-1][0]:
            raise OrdinalParseError("指数必须严格递减", text, match.start())
        terms.append(term)

        position = match.end()
        if position == len(text):
            break
        if text[position] != "+":
            raise OrdinalParseError(
                f"此处需要 '+'，实际为 {text[position]!r}", text, position
            )
        position += 1

    return Ordinal(tuple(terms))


def format_ordinal(x: Ordinal) -> str:
    """格式化为 parse 可接受的规范文本，省略 "*1" 与 "^1".

    Examples:
        >>> format_ordinal(Ordinal(((3, 2), (0, 5))))
        'w^3*2+5'
    """
    if x.is_zero:
        return "0"
    parts = []
    for exponent, coefficient in x.terms:
        if exponent == 0:
            parts.append(str(coefficient))
            continue
        part = "w" if exponent == 1 else f"w^{exponent}"
        if coefficient != 1:
            part += f"*{coefficient}"
        parts.append(part)
    return "+".join(parts)


def ordinal(value: Ordinal | str | int) -> Ordinal:
    """把字符串/整数/Ordinal 统一转换为 Ordinal."""
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int):
        return Ordinal.of(value)
    return parse(value)
