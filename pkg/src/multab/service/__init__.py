"""HTTP service exposing the certification, oracle, and sweep operations."""

from .app import create_app

__all__ = ["create_app"]
