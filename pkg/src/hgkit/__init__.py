"""Hopf Galois structures on separable extensions, computed group-theoretically."""
