"""
Command-line front end
"""

from .app import CliConfig, build_parser, cmd_check, cmd_eval, cmd_kernel, cmd_suite, main, to_json

__all__ = ["CliConfig", "build_parser", "cmd_check", "cmd_eval", "cmd_kernel", "cmd_suite", "main", "to_json"]
