"""
Core infrastructure for the tensor-network circuit toolkit: configuration,
logging, exceptions, interfaces and decorators.
"""