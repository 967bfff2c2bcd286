"""Verifier module."""

from .verifier import REPORT_NOTES, fd_derivative, verify

__all__ = ["verify", "fd_derivative", "REPORT_NOTES"]
