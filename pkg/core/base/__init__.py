"""
Base module for the tensor-network circuit toolkit.
"""
from .base_service import BaseService

__all__ = ['BaseService']
