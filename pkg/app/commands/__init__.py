"""
CLI 子命令
"""
from app.commands.router import build_parser, dispatch, to_config

__all__ = ["build_parser", "dispatch", "to_config"]
