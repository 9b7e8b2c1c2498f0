"""Max-min right-angle deviation of planar point sets.

For an n-point configuration S and subset size k, the score gamma(S, k) is
the largest minimum deviation from 90 degrees achievable by some k-subset's
angles. The package computes the score exactly, generates and verifies
covering certificates for upper bounds, extracts constructive lower-bound
witnesses, builds the classical constructions, and searches for new low-score
configurations by lattice annealing plus gradient refinement.
"""

from .certificates import (Certificate, CertEntry, VerifyReport, generate_certificate,
                           load_certificate, record_certificate_10, save_certificate,
                           verify_certificate)
from .constructions import (SpiralParams, circle_points, cluster_grid, record_config_10,
                            record_config_11, seven_point, spiral, spiral_truncated)
from .errors import (AngleDevError, BudgetExceeded, CoincidentPoints, DegenerateInput,
                     DuplicateXCoordinate, InvalidCount, InvalidK, InvalidParams,
                     InvalidScale, ParseError, ShapeError, SubsetTooSmall, TooFewPoints)
from .geometry import (Configuration, DirectionGap, Point, angle_at, deviation,
                       largest_direction_gap, reflect, rotate, scale, segment_direction,
                       translate)
from .optimize import AnnealParams, RefineParams, anneal, refine, smoothed_gamma
from .pointsio import load_document, load_points, save_points
from .scoring import (DEFAULT_BUDGET, DeviationReport, GammaResult, all_subset_argmins,
                      gamma, subset_min_deviation)
from .svgrender import RenderOptions, render_svg
from .witnesses import (BinChainState, MonotoneWitness, bin_chain_labels,
                        bin_chain_witness, longest_monotone_subsequence, monotone_witness)

__version__ = "0.1.0"

__all__ = [
    "AngleDevError", "AnnealParams", "BinChainState", "BudgetExceeded", "Certificate",
    "CertEntry", "CoincidentPoints", "Configuration", "DEFAULT_BUDGET", "DegenerateInput",
    "DeviationReport", "DirectionGap", "DuplicateXCoordinate", "GammaResult", "InvalidCount",
    "InvalidK", "InvalidParams", "InvalidScale", "MonotoneWitness", "ParseError", "Point",
    "RefineParams", "RenderOptions", "ShapeError", "SpiralParams", "SubsetTooSmall",
    "TooFewPoints", "VerifyReport", "all_subset_argmins", "angle_at", "anneal",
    "bin_chain_labels", "bin_chain_witness", "circle_points", "cluster_grid", "deviation",
    "gamma", "generate_certificate", "largest_direction_gap", "load_certificate",
    "load_document", "load_points", "longest_monotone_subsequence", "monotone_witness",
    "record_certificate_10", "record_config_10", "record_config_11", "refine", "reflect",
    "render_svg", "rotate", "save_certificate", "save_points", "scale", "segment_direction",
    "seven_point", "smoothed_gamma", "spiral", "spiral_truncated", "subset_min_deviation",
    "translate", "verify_certificate",
]
