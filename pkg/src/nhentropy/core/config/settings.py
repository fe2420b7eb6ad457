# src/nhentropy/core/config/settings.py

"""
使用 Pydantic 定义应用配置模型，加载来自 .env、环境变量等的配置。
"""
import logging
from typing import Dict, Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from nhentropy.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


class PluginSetting(BaseSettings):
    """单个插件的配置基类，具体插件可以继承并添加字段。"""
    model_config = SettingsConfigDict(extra='allow')


class AppSettings(BaseSettings):
    """
    应用程序的核心配置。

    数值容差的默认值是整个库共用的约定：厄米性检查用 atol，
    半正定截断用 neg_tol，熵求和中的本征值截断用 entropy_cutoff。
    """
    model_config = SettingsConfigDict(
        env_file='.env',          # 加载 .env 文件
        env_prefix='NHENTROPY_',  # 环境变量前缀，例如 NHENTROPY_LOG_LEVEL
        extra='ignore'            # 忽略未定义的额外字段
    )

    # --- 日志配置 ---
    log_level: str = "INFO"

    # --- 数值容差 ---
    atol: float = Field(default=1e-12, gt=0, description="厄米性与矩阵相等比较的绝对容差。")
    neg_tol: float = Field(default=1e-10, gt=0, description="半正定检查允许的最小负本征值幅度。")
    entropy_cutoff: float = Field(default=1e-14, gt=0, description="熵求和中 0·ln0 = 0 约定的本征值截断。")
    rate_cutoff: float = Field(default=1e-12, gt=0, description="低于该本征值时熵产生率视为无定义。")
    trace_floor: float = Field(default=1e-300, gt=0, description="低于该迹时判定概率消失。")
    trace_tol: float = Field(default=1e-9, gt=0, description="归一化密度算符迹的容差。")

    # --- 线性代数与积分器 ---
    eig_solver: Literal["numpy", "jacobi"] = "numpy"
    jacobi_max_sweeps: int = Field(default=100, gt=0)
    expm_max_norm: float = Field(default=700.0, gt=0, description="矩阵指数参数的范数上限，超过即判定溢出。")
    default_substeps: int = Field(default=100, gt=0, description="RK4 每单位时间的子步数。")

    # --- 插件选择与配置 ---
    default_model: str = "two_level"
    default_parser: str = "scenario"
    provider_config: Dict[str, PluginSetting] = Field(default_factory=dict)

    # --- 输出 ---
    output_dir: str = "output"


def load_settings() -> AppSettings:
    """
    加载并返回应用配置实例。

    Returns:
        AppSettings: 加载后的配置对象。

    Raises:
        ConfigurationError: 如果配置加载失败。
    """
    try:
        settings = AppSettings()
        logger.debug("应用配置加载成功。")
        return settings
    except Exception as e:
        logger.exception("加载应用配置时出错。")
        raise ConfigurationError(f"加载配置失败: {e}") from e


# 全局配置实例 (惰性加载)
_settings_instance: Optional[AppSettings] = None


def get_settings() -> AppSettings:
    """
    获取全局唯一的 AppSettings 实例。
    如果尚未加载，则加载它。
    """
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = load_settings()
    return _settings_instance


def reset_settings(settings: Optional[AppSettings] = None) -> None:
    """替换 (或清空) 全局配置实例，主要供测试和 CLI 覆盖使用。"""
    global _settings_instance
    _settings_instance = settings
