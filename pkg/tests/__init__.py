"""pcfflow 测试包."""
