"""结构校验模块异常定义."""

from ..exceptions import PcfFlowError


class VerifyError(PcfFlowError):
    """结构校验基础异常."""

    pass


class InconsistentInputError(VerifyError):
    """结构与 chain/调度的来源记录不一致."""

    pass


class UnknownFormatError(VerifyError):
    """未知的报告输出格式."""

    pass


class LawSuiteConfigError(VerifyError):
    """随机定律检查的配置不合法."""

    pass
