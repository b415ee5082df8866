"""
Test package for GeoKernelLab.
"""
