"""
Command-line interface (``tnqc``).
"""
from .run_config import RunConfig
from .main import build_parser, main

__all__ = ['RunConfig', 'build_parser', 'main']
