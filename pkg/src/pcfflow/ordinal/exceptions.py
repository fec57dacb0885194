"""序数模块异常定义."""

from ..exceptions import PcfFlowError


class OrdinalError(PcfFlowError):
    """序数模块基础异常."""

    pass


class InvalidOrdinalError(OrdinalError):
    """项序列不满足 Cantor 范式（指数非严格递减、系数为 0 等）."""

    pass


class NotLimitOrdinalError(OrdinalError):
    """要求极限序数的操作收到了 0 或后继序数."""

    pass


class OrdinalParseError(OrdinalError):
    """序数表达式解析异常.

    Attributes:
        text: 原始表达式
        position: 出错字符的下标（从 0 开始）
    """

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} (位置 {position})")
        self.reason = message
        self.text = text
        self.position = position

    def caret(self) -> str:
        """返回带插入符的两行错误指示，用于 CLI 输出."""
        return f"{self.text}\n{' ' * self.position}^ {self.reason}"
