"""Base exception for everything this package raises on purpose."""


class VaguetimeError(Exception):
    """Common ancestor so callers can catch package errors in one clause."""
