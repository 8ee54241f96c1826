"""Synonym suggestion for personal names.

Builds weighted name graphs from digitized family-tree dumps and ranks
reachable candidate names with combined network / string / phonetic scoring.
Ships the graph-based suggester, a phonetic-fallback hybrid, the classic
phonetic and string-similarity baselines, and an evaluation harness.
"""

__version__ = "0.1.0"
