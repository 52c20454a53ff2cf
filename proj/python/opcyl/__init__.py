"""Exact symbolic cylinders of pseudo-cellular DG-operads."""

try:
    from ._opcyl import Element, Presentation, presentations, verify
except ImportError:  # in-tree layout: the extension sits on PYTHONPATH
    from _opcyl import Element, Presentation, presentations, verify

__all__ = ["Element", "Presentation", "presentations", "verify"]
