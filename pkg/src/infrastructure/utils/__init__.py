"""
Utility functions for the infrastructure layer
"""
