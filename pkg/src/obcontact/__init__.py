"""Contact structures from open books with four-punctured-sphere pages."""

__version__ = "0.1.0"
