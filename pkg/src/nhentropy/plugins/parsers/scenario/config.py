# src/nhentropy/plugins/parsers/scenario/config.py
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ScenarioParserSettings(BaseSettings):
    """
    场景解析器插件的配置。
    从环境变量或 .env 文件加载，前缀为 'NHENTROPY_PLUGIN_SCENARIO_'。
    """
    model_config = SettingsConfigDict(
        env_prefix='NHENTROPY_PLUGIN_SCENARIO_',
        env_file='.env',
        extra='ignore',
    )

    file_extensions: List[str] = Field(
        default_factory=lambda: ["scn", "ini", "txt"],
        description="解析器声明支持的文件扩展名。"
    )
    max_line_length: int = Field(
        default=10000, gt=0,
        description="单行最大字符数，超过时报语法错误。"
    )
