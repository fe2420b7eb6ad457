# src/nhentropy/plugins/models/custom/__init__.py
from .provider import CustomModel, CustomParams, expression_env

__all__ = ["CustomModel", "CustomParams", "expression_env"]
