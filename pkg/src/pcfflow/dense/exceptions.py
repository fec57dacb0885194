"""稠密集模块异常定义."""

from ..exceptions import PcfFlowError


class DenseSetError(PcfFlowError):
    """稠密集模块基础异常."""

    pass


class InvalidDenseSpecError(DenseSetError):
    """稠密集参数不满足约束（λ 非极限、α < λ、γ >= λ、避开集元素不小于 α 等）."""

    pass


class DenseSpecDecodeError(DenseSetError):
    """稠密集 JSON 无法解码."""

    pass
