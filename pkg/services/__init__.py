"""
Services of the tensor-network circuit toolkit: circuit cutting, training
and sliding-window detection.
"""
