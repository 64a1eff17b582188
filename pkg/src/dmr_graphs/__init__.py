"""Distance mean-regular graph analysis core package."""

__version__ = "0.1.0"
__author__ = "Nicholas Wilde"
