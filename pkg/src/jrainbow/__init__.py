"""Exact J- and J*-colouring numbers, certificates and colour statistics."""
from .catalogue import ClosedFormPrediction, predict
from .colouring import (
    ColourDistribution,
    Colouring,
    colour_distribution,
    is_j_feasible,
    is_j_star_feasible,
    is_proper,
    j_mean,
    j_variance,
    rainbow_vertices,
)
from .errors import BudgetExceeded, ConnectivityError, JRainbowError, ParseError, ValidationError
from .graph import (
    CompleteGraph,
    CompleteMultipartiteGraph,
    CycleGraph,
    Graph,
    PathGraph,
    StarGraph,
    WheelGraph,
    closed_neighbourhood,
    generate_family,
    is_connected,
    min_degree,
    parse_graph,
    serialize_graph,
)
from .solver import JOutcome, Mode, brute_force, cross_check, find_colouring, j_number

__version__ = "0.1.0"
