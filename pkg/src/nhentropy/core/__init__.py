# src/nhentropy/core/__init__.py
# 核心框架包初始化文件
