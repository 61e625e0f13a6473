"""Exact-arithmetic workbench for symmetric functions and their categorification.

Subpackages cover: integer partitions and symmetric-group combinatorics
(`combinatorics`), the ring of symmetric functions with five bases and Hopf
structure (`symfunc`), the integral Weyl algebra and its polynomial
representations (`weyl`), nilcoxeter algebras and their Grothendieck groups
(`nilcoxeter`), the integral Heisenberg algebra and Fock space (`heisenberg`),
symmetric-group bimodules realizing induction/restriction (`bimodel`), the
planar diagram category (`diagcat`), and a command-line front end (`cli`).

All arithmetic is exact: integers and `fractions.Fraction` throughout.
"""

__version__ = "0.1.0"
