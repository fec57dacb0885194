"""chain 构造测试包."""
