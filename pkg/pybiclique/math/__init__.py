from pybiclique.math.entropy import binary_entropy
from pybiclique.math.combinatorics import saturating_binomial, multinomial, weak_compositions
