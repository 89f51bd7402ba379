from pybiclique.partition.basic import *
from pybiclique.partition.density import *
from pybiclique.partition.hypergraph import *
