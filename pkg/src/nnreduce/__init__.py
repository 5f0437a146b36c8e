"""Exact minimum lossless reductions of nearest-neighbour training sets."""

from .equivalence import EquivalenceVerdict, is_equivalent_1d, is_reduced_training_set
from .estimator import NearestNeighborReducer
from .exact import SearchBudget, all_minimum_subsets, decide, min_reduced
from .geometry import (Line, bisector, cocircular, general_position, incircle, orient,
                       same_bisector, squared_distance)
from .model import LabelledPointSet, classify, decision_boundary, load_instance, nn_set, voronoi_cell, voronoi_walls
from .relevant import (reduce_general_position, relevant_points_by_definition,
                       relevant_points_by_walls)
from .solve import solve
from .solver1d import solve_1d

__version__ = "0.1.0"
