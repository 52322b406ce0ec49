"""
Core package for GFC-Jac

Contains the group, orbifold, scalar and curve layers and the
decomposition pipelines built on them.
"""
