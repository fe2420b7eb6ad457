# src/nhentropy/core/interfaces/base_parser.py
import abc
from pathlib import Path
from typing import IO, List, Optional, Union

from nhentropy.core.interfaces.base_plugin import BasePluginInterface
from nhentropy.core.scenario.models import Scenario


class BaseParser(BasePluginInterface, abc.ABC):
    """
    场景解析器接口定义。
    负责将场景文件解析为统一的 Scenario 对象。
    """

    def parse(self, file_source: Union[str, Path, IO[str]], **kwargs) -> Scenario:
        """
        解析给定的文件源。

        Args:
            file_source (Union[str, Path, IO[str]]): 文件路径或文本 IO 流。
            **kwargs: 传递给 parse_text 的其他参数。

        Returns:
            Scenario: 解析后的场景对象。

        Raises:
            ParsingError: 如果解析过程中发生错误。
            FileNotFoundError: 如果 file_source 是路径且文件不存在。
            TypeError: 如果 file_source 类型不支持。
        """
        if isinstance(file_source, (str, Path)):
            path = Path(file_source)
            text = path.read_text(encoding="utf-8")
            return self.parse_text(text, source=str(path), **kwargs)
        if hasattr(file_source, "read"):
            return self.parse_text(file_source.read(), source=getattr(file_source, "name", None), **kwargs)
        raise TypeError(f"不支持的文件源类型: {type(file_source).__name__}")

    @abc.abstractmethod
    def parse_text(self, text: str, source: Optional[str] = None, **kwargs) -> Scenario:
        """解析场景文本。"""

    @property
    @abc.abstractmethod
    def supported_types(self) -> List[str]:
        """
        返回该解析器支持的文件扩展名列表 (小写, 例如 ['scn'])。
        """
