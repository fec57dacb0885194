"""稠密集测试包."""
