"""Exact computation of the Links-Gould two-variable link invariant.

Modules:
  exact_arith   the two coefficient domains (Laurent-with-Y, rational functions)
  braid         braid words, parsing, closure combinatorics, Markov moves
  lg_rmatrix    the 16x16 R-matrix engine computing the invariant
  bratteli      branching-graph dimension combinatorics
  hecke_reps    the 24 irreps of the cubic Hecke algebra H4 and the r2/r3 relations
  markov_trace  the unique Markov trace on LG4 and the cross-validation path
  cli           the `lg` command line
"""

__version__ = "0.1.0"
