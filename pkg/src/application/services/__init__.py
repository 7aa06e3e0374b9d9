"""Application services."""

from .expression_service import ExpressionService

__all__ = ["ExpressionService"]
