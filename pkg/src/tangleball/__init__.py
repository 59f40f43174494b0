"""Rational-tangle calculus, 2-bridge classification, and exact diagram audits."""

from .rationals import ExtRational

__all__ = ["ExtRational"]
