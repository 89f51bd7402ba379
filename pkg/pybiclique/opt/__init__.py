from pybiclique.opt.densest import *
from pybiclique.opt.finder import *
