"""
Config module for the tensor-network circuit toolkit.
"""
from .config_manager import ConfigManager

__all__ = ['ConfigManager']
