"""Exact invariants of 4-dimensional 2-handlebodies from quantum sl2.

The package computes Hennings-style bead invariants of Kirby diagrams whose
undotted components carry labels in a finite abelian group (Z/2Z in
practice), using exact cyclotomic arithmetic throughout.  Sub-modules:

- ``cyclotomic``: the scalar field Q(zeta_8p).
- ``sl2``: PBW arithmetic for the restricted, extended and small quantum
  groups of sl2 at a root of unity of order 2p, with all closed-form
  structure data (R-matrix, ribbon element, M-matrix, copairing, integral,
  cointegral, graded pieces).
- ``hopf``: Hopf group-coalgebra structure tables, axiom checkers,
  splitting systems, direct sums, and the factorizability test.
- ``diagrams``: Morse-word Kirby diagrams, parser/renderer, linking matrix,
  signature, handle trading, characteristic/even sublinks.
- ``beads``: the bead decoration algorithm and its evaluation.
- ``invariants``: refined/unrefined invariants, boundary invariants,
  decomposition and rescaling checks, the full verification suite.
- ``cli``: the ``qkirby`` command-line interface.
"""

from .cyclotomic import Cyc, CycContext, context, named_constants, parse, render

__all__ = [
    "Cyc",
    "CycContext",
    "context",
    "named_constants",
    "parse",
    "render",
]
