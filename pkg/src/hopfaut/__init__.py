"""Exact computations with Hopf algebra tensor powers, Aut(F_n) actions and Schur functors."""

__version__ = "0.1.0"
