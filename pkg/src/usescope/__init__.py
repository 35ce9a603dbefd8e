"""usescope: explore candidate uses of an AI technology, label their EU AI
Act risk tier, flag uses overlooked by the literature, and score
practitioner annotations."""

__version__ = "0.1.0"
