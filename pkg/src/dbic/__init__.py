"""Identifying codes, distance balls, and eccentricity on undirected
de Bruijn graphs B(d, n)."""

from .balls import (PathParams, Pattern, PrefixBoundBreakdown, all_balls,
                    ball_bfs, ball_closed_form, enumerate_path_params,
                    pattern_for, prefix_bound, prefix_margin, prefix_set)
from .codes import (CodeReport, MinCodeResult, SeparationConstraint, TwinPair,
                    build_constraints, code_strings, find_twins, greedy_code,
                    is_identifiable, min_code, verify_code)
from .errors import (CodeVertexOutOfRange, DbicError, InfeasibleNoCode,
                     InvalidParameters, NotApplicable, VertexParseError)
from .graph import DeBruijnGraph, export_dot
from .metrics import (EccentricityReport, bfs_distances, construct_antipodal,
                      distance, eccentricity, eccentricity_table,
                      radius_diameter)
from .strings import (DBString, decode, encode, left_shifts, right_shifts,
                      substring)
from .vertexset import VertexSet, bits, mask_of, popcount, to_ids

__version__ = "0.1.0"

__all__ = [
    "DBString", "DeBruijnGraph", "EccentricityReport", "CodeReport",
    "MinCodeResult", "PathParams", "Pattern", "PrefixBoundBreakdown",
    "SeparationConstraint", "TwinPair", "VertexSet",
    "all_balls", "ball_bfs", "ball_closed_form", "bfs_distances", "bits",
    "build_constraints", "code_strings", "construct_antipodal", "decode",
    "distance", "eccentricity", "eccentricity_table", "encode",
    "enumerate_path_params", "export_dot", "find_twins", "greedy_code",
    "is_identifiable", "left_shifts", "mask_of", "min_code", "pattern_for",
    "popcount", "prefix_bound", "prefix_margin", "prefix_set",
    "radius_diameter", "right_shifts", "substring", "to_ids", "verify_code",
    "CodeVertexOutOfRange", "DbicError", "InfeasibleNoCode",
    "InvalidParameters", "NotApplicable", "VertexParseError",
]
