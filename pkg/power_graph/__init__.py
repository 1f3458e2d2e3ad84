from .graph import EXPORT_FORMATS, ExportError, Graph, bits, export_graph, popcount, write_graph
from .power_graph import PrimeGraph, build_power_graph, build_prime_graph
from .twins import DEFAULT_TWIN_CAP, TwinReducedGraph, twin_reduce

__all__ = ['EXPORT_FORMATS', 'ExportError', 'Graph', 'bits', 'export_graph', 'popcount', 'write_graph',
           'PrimeGraph', 'build_power_graph', 'build_prime_graph', 'DEFAULT_TWIN_CAP', 'TwinReducedGraph',
           'twin_reduce']
