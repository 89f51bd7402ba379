from pybiclique.core.graph import Graph, Digraph, Hypergraph, edge_density
from pybiclique.core.partition import (Biclique, DClique, BicliquePartition, DCliquePartition, weight, loads,
                                       verify_partition, verify_dpartition, VerificationReport,
                                       PartitionVerificationError)
from pybiclique.core.tournament import Tournament, CirculantTournament, make_almost_regular, check_almost_regular
from pybiclique.core.partitioner import GraphPartitioner, HypergraphPartitioner
from pybiclique.core.solver import GenericIterativeAlgorithm
