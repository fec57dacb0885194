"""条件内核测试包."""
