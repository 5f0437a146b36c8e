"""Compiler from V-cycle max2SAT formulas to red/blue point sets."""

from .compile import GadgetLayout, assignment_to_subset, compile_instance
from .gadgets import LayoutConstants
from .sat import BookEmbedding, Max2SatInstance, NotEmbeddable, two_page_assignment
