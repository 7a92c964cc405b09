"""Exact zeta and Artin L-functions of finite quotients of the PGL3 building."""

__version__ = "0.1.0"
