# src/nhentropy/core/utils/logging.py

"""
配置全局日志记录器。
"""
import logging
from typing import IO, Optional

LOG_FORMAT = '[%(asctime)s] %(levelname)s:%(name)s:%(message)s'

_HANDLER_NAME = "nhentropy"


def setup_logging(level: str = "INFO", stream: Optional[IO[str]] = None) -> None:
    """
    全局日志配置，设置日志级别和格式。

    重复调用只更新级别和输出流，不会叠加处理器 (命令行的 --verbose 依赖这一点)。

    :param level: 日志级别，如 "INFO", "DEBUG" 等。
    :param stream: 输出流，默认 stderr。
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(level.upper())
    logging.getLogger("nhentropy").setLevel(level.upper())

    handler = next((h for h in root_logger.handlers if h.get_name() == _HANDLER_NAME), None)
    if handler is None:
        handler = logging.StreamHandler(stream)
        handler.set_name(_HANDLER_NAME)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root_logger.addHandler(handler)
    elif stream is not None and isinstance(handler, logging.StreamHandler):
        handler.setStream(stream)
