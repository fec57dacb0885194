"""chain 构造模块异常定义."""

from ..exceptions import PcfFlowError


class BuilderError(PcfFlowError):
    """chain 构造基础异常."""

    pass


class ScheduleError(BuilderError):
    """调度参数不合法（分离元组违反约束等）."""

    pass


class UnknownPresetError(BuilderError):
    """未知的预置调度名称."""

    pass


class ChainDefectError(BuilderError):
    """chain 构造过程中出现本不应发生的失败（如 amalgamation 前置条件不成立）."""

    pass


class StructureDecodeError(BuilderError):
    """调度、chain 或结构导出 JSON 无法解码."""

    pass
