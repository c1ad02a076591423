"""
Core Module
核心模块
"""
from app.core.config import settings, HEISCHAR_ROOT

__all__ = [
    "settings",
    "HEISCHAR_ROOT",
]
