"""Utility modules for dmr_graphs."""
