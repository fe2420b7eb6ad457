# src/nhentropy/core/config/__init__.py
# 配置包
from nhentropy.core.config.settings import AppSettings, PluginSetting, get_settings, load_settings, reset_settings

__all__ = ["AppSettings", "PluginSetting", "get_settings", "load_settings", "reset_settings"]
