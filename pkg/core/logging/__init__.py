"""
Logging module for the tensor-network circuit toolkit.
"""
from .log_manager import LogManager

__all__ = ['LogManager']
