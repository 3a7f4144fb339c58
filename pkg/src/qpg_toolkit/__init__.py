"""Quasi-phase-matched SFG / quantum pulse gate simulator and profile-retrieval toolkit."""

__version__ = "0.1.0"
