"""序数模块测试包."""
