"""
Console module for the tensor-network circuit toolkit.
"""
from .console_service import ConsoleService

__all__ = ['ConsoleService']
