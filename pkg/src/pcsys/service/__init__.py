"""HTTP service wrapper around the analysis package."""

from .app import app

__all__ = ["app"]
