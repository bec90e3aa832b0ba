"""
Utils module for the tensor-network circuit toolkit.
"""
