# src/nhentropy/core/interfaces/__init__.py
# 插件接口定义包
from nhentropy.core.interfaces.base_model_provider import BaseModelProvider, ClosedFormSolution
from nhentropy.core.interfaces.base_parser import BaseParser
from nhentropy.core.interfaces.base_plugin import BasePluginInterface

__all__ = ["BaseModelProvider", "BaseParser", "BasePluginInterface", "ClosedFormSolution"]
