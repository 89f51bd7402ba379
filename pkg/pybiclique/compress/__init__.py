from pybiclique.compress.succinct import SBRepr, CBRepr, build_sb, build_cb, decode
from pybiclique.compress.queries import QueryEngine, is_independent, cut
