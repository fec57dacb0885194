"""pcfflow 异常定义模块."""


class PcfFlowError(Exception):
    """pcfflow 基础异常类."""

    pass
