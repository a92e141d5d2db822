"""Mobile-cell resource sharing simulator and analytic evaluator."""

__version__ = "0.1.dev1"
