# src/nhentropy/plugins/models/__init__.py
# 内置物理模型插件；入口点不可用时插件管理器回退到这里的注册表
from .const_gamma import ConstGammaModel
from .custom import CustomModel
from .two_level import TwoLevelModel

BUILTIN_MODELS = {
    ConstGammaModel.name: ConstGammaModel,
    TwoLevelModel.name: TwoLevelModel,
    CustomModel.name: CustomModel,
}

__all__ = ["BUILTIN_MODELS", "ConstGammaModel", "CustomModel", "TwoLevelModel"]
