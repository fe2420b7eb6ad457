# src/nhentropy/plugins/models/two_level/config.py
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class TwoLevelSettings(BaseSettings):
    """
    两能级模型插件的配置。
    从环境变量或 .env 文件加载，前缀为 'NHENTROPY_PLUGIN_TWO_LEVEL_'。
    """
    model_config = SettingsConfigDict(
        env_prefix='NHENTROPY_PLUGIN_TWO_LEVEL_',
        env_file='.env',
        extra='ignore',
    )

    probe_factor: float = Field(
        default=10.0, gt=0,
        description="阈值扫描的默认探测时间 τ_probe = probe_factor/μ。"
    )
    fit_fraction: float = Field(
        default=0.2, gt=0, le=1,
        description="斜率拟合使用 [0, τ_probe] 末尾的比例。"
    )
    fit_samples: int = Field(
        default=201, ge=2,
        description="斜率拟合窗口内的采样点数。"
    )
