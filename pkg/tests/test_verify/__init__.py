"""结构校验测试包."""
