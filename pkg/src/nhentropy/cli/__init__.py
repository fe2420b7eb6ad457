# src/nhentropy/cli/__init__.py
# 命令行前端
