# tests/conftest.py
import logging

import numpy as np
import pytest

from nhentropy.core.algebra import ComplexMatrix
from nhentropy.core.config import reset_settings
from nhentropy.core.plugin_manager import PluginManager


@pytest.fixture(autouse=True)
def fresh_settings():
    """每个测试使用新加载的全局配置，测试中通过 reset_settings(AppSettings(...)) 覆盖。"""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def detach_log_handler():
    """测试结束后移除 setup_logging 挂到根记录器上的处理器，避免其绑定到已关闭的捕获流。"""
    yield
    root = logging.getLogger()
    for handler in [h for h in root.handlers if h.get_name() == "nhentropy"]:
        root.removeHandler(handler)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def make_hermitian(rng):
    def _make(dim: int, scale: float = 1.0) -> ComplexMatrix:
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        return ComplexMatrix(0.5 * scale * (a + a.conj().T))
    return _make


@pytest.fixture
def make_density(rng):
    """满秩的随机密度算符 (迹为 1)。"""
    def _make(dim: int) -> ComplexMatrix:
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        m = a @ a.conj().T + 0.1 * np.eye(dim)
        return ComplexMatrix(m / np.trace(m).real)
    return _make


@pytest.fixture
def manager():
    return PluginManager()


@pytest.fixture
def write_scenario(tmp_path):
    """把场景文本写入 tmp_path 下的文件并返回路径。"""
    def _write(text: str, name: str = "scenario.scn"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write

