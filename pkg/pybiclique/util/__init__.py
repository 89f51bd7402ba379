from pybiclique.util.misc import lg, lglg, ceil_lg, ceil_div, iroot, as_vertex_set
