"""
Decorators module for the tensor-network circuit toolkit.
"""
from .logging import log_execution
from .performance import performance_monitor

__all__ = ['log_execution', 'performance_monitor']
