"""Up/down operators, path bijections and RSK on planar binary trees."""

from .errors import SchurTreesError
from .graph import PathPair, down_image, paths_N, paths_S_tilde, up_successors
from .growth import GrowthDiagram, rsk_forward, rsk_inverse
from .labelling import Kind, Labelling, Path, enumerate_labellings, labelling_to_path, path_to_labelling
from .operators import LinComb, apply
from .qsym import Polynomial, cauchy_kernel, is_quasisymmetric, labelling_sum, schur_poly
from .trees import EMPTY, Tree, detach_chain, enumerate_trees, removal_chain

__all__ = [
    "EMPTY", "GrowthDiagram", "Kind", "Labelling", "LinComb", "Path", "PathPair", "Polynomial",
    "SchurTreesError", "Tree", "apply", "cauchy_kernel", "detach_chain", "down_image",
    "enumerate_labellings", "enumerate_trees", "is_quasisymmetric", "labelling_sum",
    "labelling_to_path", "path_to_labelling", "paths_N", "paths_S_tilde", "removal_chain",
    "rsk_forward", "rsk_inverse", "schur_poly", "up_successors",
]
