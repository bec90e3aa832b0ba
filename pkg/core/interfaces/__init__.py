"""
Interfaces module for the tensor-network circuit toolkit.
"""
from .configurable import Configurable
from .loggable import Loggable
from .classifier import WindowClassifier

__all__ = ['Configurable', 'Loggable', 'WindowClassifier']
