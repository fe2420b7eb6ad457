# src/nhentropy/core/plugin_manager.py

"""
插件管理器。
负责发现、加载、验证和提供插件实例。
依赖于 `pyproject.toml` 中定义的 entry points；包未安装 (例如直接从源码树运行测试) 时回退到内置注册表。
"""
import importlib.metadata
import logging
from collections import defaultdict
from typing import Any, Dict, List, Optional, Type, TypeVar, cast

from nhentropy.core.config.settings import AppSettings, get_settings
from nhentropy.core.exceptions import (
    ConfigurationError,
    PluginConfigurationError,
    PluginLoadError,
    PluginNotFoundError,
)
from nhentropy.core.interfaces import BaseModelProvider, BaseParser

logger = logging.getLogger(__name__)

T = TypeVar('T')

# 插件组名称，应与 pyproject.toml 中的组名一致 (前缀 "nhentropy.")
PLUGIN_GROUPS = {
    "models": BaseModelProvider,
    "parsers": BaseParser,
}


def _builtin_plugins(group_name: str) -> Dict[str, Type]:
    """入口点缺失时使用的内置插件。"""
    if group_name == "models":
        from nhentropy.plugins.models import BUILTIN_MODELS
        return dict(BUILTIN_MODELS)
    if group_name == "parsers":
        from nhentropy.plugins.parsers.scenario import ScenarioParser
        return {"scenario": ScenarioParser}
    return {}


class PluginManager:
    """
    管理应用中的所有插件。
    """
    def __init__(self, settings: Optional[AppSettings] = None):
        """
        初始化插件管理器。

        Args:
            settings (Optional[AppSettings]): 应用配置。如果为 None，则使用全局配置。
        """
        self.settings = settings or get_settings()
        self._plugins: Dict[Type, Dict[str, Type]] = defaultdict(dict)  # {InterfaceType: {plugin_name: PluginClass}}
        self._instances: Dict[Type, Dict[str, Any]] = defaultdict(dict)  # {InterfaceType: {plugin_name: PluginInstance}}
        self._load_all_plugins()

    def _register(self, interface_cls: Type, plugin_name: str, plugin_class: Type, origin: str) -> None:
        if not (isinstance(plugin_class, type) and issubclass(plugin_class, interface_cls)):
            logger.error(
                f"插件 '{plugin_name}' ({origin}) 未实现预期的接口 '{interface_cls.__name__}'。将跳过此插件。"
            )
            return
        self._plugins[interface_cls][plugin_name] = plugin_class
        logger.debug(f"已注册插件 '{plugin_name}' (类型: {interface_cls.__name__}, 来源: {origin})。")

    def _load_all_plugins(self) -> None:
        """
        发现并加载所有在 pyproject.toml 中声明的插件，再用内置注册表补齐缺失的插件。
        """
        logger.debug("开始加载所有插件...")
        for group_name, interface_cls in PLUGIN_GROUPS.items():
            entry_point_group = f"nhentropy.{group_name}"
            try:
                entry_points = importlib.metadata.entry_points(group=entry_point_group)
            except Exception as e:
                logger.warning(f"无法获取插件组 '{entry_point_group}' 的入口点: {e}", exc_info=True)
                entry_points = []

            for ep in entry_points:
                try:
                    plugin_class = ep.load()
                except Exception as e:
                    logger.error(f"加载插件 '{ep.name}' 从入口点 '{ep.value}' 时出错: {e}", exc_info=True)
                    continue
                self._register(interface_cls, ep.name, plugin_class, f"入口点 {ep.value}")

            for plugin_name, plugin_class in _builtin_plugins(group_name).items():
                if plugin_name not in self._plugins[interface_cls]:
                    self._register(interface_cls, plugin_name, plugin_class, "内置")

        logger.debug(f"所有插件加载完成: {self.list_available_plugins()}")

    def _get_plugin_config(self, plugin_name: str) -> Dict[str, Any]:
        """获取特定插件的配置字典。"""
        plugin_cfg_obj = self.settings.provider_config.get(plugin_name)
        if plugin_cfg_obj is None:
            return {}
        return plugin_cfg_obj.model_dump()

    def _get_instance(self, interface_cls: Type[T], plugin_name: str) -> T:
        """获取或创建插件实例。"""
        if plugin_name in self._instances.get(interface_cls, {}):
            return cast(T, self._instances[interface_cls][plugin_name])

        if plugin_name not in self._plugins.get(interface_cls, {}):
            raise PluginNotFoundError(interface_cls.__name__, plugin_name)

        plugin_class = self._plugins[interface_cls][plugin_name]
        config = self._get_plugin_config(plugin_name)

        try:
            logger.debug(f"正在创建插件 '{plugin_name}' (类型: {interface_cls.__name__}) 的实例...")
            instance = plugin_class(config=config)
            instance.plugin_name = plugin_name
            if instance.validate_config() is False:
                raise PluginConfigurationError(f"插件 '{plugin_name}' 配置无效。")
        except (PluginConfigurationError, ConfigurationError):
            raise
        except Exception as e:
            logger.exception(f"创建插件 '{plugin_name}' 实例时出错: {e}", exc_info=True)
            raise PluginLoadError(f"插件 '{plugin_name}' 实例化失败", e) from e

        if isinstance(instance, BaseParser) and getattr(instance, "model_resolver", "absent") is None:
            # 让解析器通过本管理器解析模型名称 (包括第三方模型插件)
            instance.model_resolver = self.get_model
        self._instances[interface_cls][plugin_name] = instance
        return cast(T, instance)

    def get_plugin(self, interface_cls: Type[T], name: Optional[str] = None) -> T:
        """
        获取指定接口类型和名称的插件实例。

        Args:
            interface_cls (Type[T]): 请求的插件接口类型 (例如 BaseParser)。
            name (Optional[str]): 请求的插件名称。如果为 None，则使用配置中的默认插件。

        Returns:
            T: 插件实例。

        Raises:
            PluginNotFoundError: 如果找不到合适的插件。
            ConfigurationError: 如果默认插件未配置。
            PluginLoadError: 如果插件加载或实例化失败。
        """
        if name:
            return self._get_instance(interface_cls, name)

        plugin_type_key = next((k for k, v in PLUGIN_GROUPS.items() if v is interface_cls), None)
        default_plugin_name = getattr(self.settings, f"default_{plugin_type_key[:-1]}", None) if plugin_type_key else None
        if not default_plugin_name:
            raise ConfigurationError(
                f"未指定插件名称，且无法确定接口 '{interface_cls.__name__}' 的默认插件。"
                f"可用插件: {sorted(self._plugins.get(interface_cls, {}))}"
            )
        logger.debug(f"获取接口 '{interface_cls.__name__}' 的默认插件: '{default_plugin_name}'")
        return self._get_instance(interface_cls, default_plugin_name)

    def get_model(self, name: Optional[str] = None) -> BaseModelProvider:
        """获取模型插件实例。"""
        return self.get_plugin(BaseModelProvider, name=name)

    def get_parser(self, name: Optional[str] = None) -> BaseParser:
        """获取场景解析器实例。"""
        return self.get_plugin(BaseParser, name=name)

    def list_available_plugins(self) -> Dict[str, List[str]]:
        """列出所有已发现和加载的插件。"""
        available = {}
        for type_key, interface_cls in PLUGIN_GROUPS.items():
            available[type_key] = sorted(self._plugins.get(interface_cls, {}))
        return available
