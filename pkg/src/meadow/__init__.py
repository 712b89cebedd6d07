"""Exact computation and equational proof checking for meadows.

A meadow is a commutative ring with a total inverse satisfying
``(x^-1)^-1 = x`` and ``x * (x * x^-1) = x``; in the rationals this means
``0^-1 = 0``.  The package offers exact evaluation over the rationals and prime
fields, a normalizer to standard meadow forms, sampled and exact equivalence
checks, and a kernel for step-by-step equational proofs.
"""

from .equiv import SampleConfig, equiv_random, equiv_univariate_exact
from .numerics import Q0, Model
from .proofs import Registry, check_proof, check_propagation, run_corpus
from .smf import normalize
from .syntax import parse, print_term
from .term import evaluate

__version__ = "0.1.0"

__all__ = [
    "Model",
    "Q0",
    "Registry",
    "SampleConfig",
    "check_proof",
    "check_propagation",
    "equiv_random",
    "equiv_univariate_exact",
    "evaluate",
    "normalize",
    "parse",
    "print_term",
    "run_corpus",
]
