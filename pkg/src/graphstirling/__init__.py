"""Graph Stirling numbers through five combinatorial routes.

The sequence ``S(k)`` counting partitions of a graph's vertices into ``k``
independent sets is computed, for quasi-threshold graphs given by Dyck
words, by set-partition enumeration, Weyl-algebra normal ordering, rook
placements on a Ferrers board, bipartite matchings and chromatic-polynomial
inversion.  :mod:`graphstirling.normality` measures how close the resulting
histograms are to a normal law.
"""

from .dyck import DyckWord, parse_word
from .graphs import Graph

__version__ = "0.1.0"

__all__ = ["DyckWord", "Graph", "parse_word", "__version__"]
