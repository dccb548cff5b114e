"""Exact decomposition of elements of arithmetic Fuchsian groups and SL(2,Z)."""

from .catalog import (FundamentalDomain, RegionTag, SignaturePresentation, classify_point,
                      gamma_minus, gamma_plus, get_presentation, validate_presentation)
from .errors import FuchsDecompError
from .hecke import Divisor, TreeLabel, enumerate_tree, hecke_reps
from .homology import DecompResult, GenWord, HomologyClass, decompose, multiply_word
from .moebius import MoebiusMap, UHPoint, isometry_circle
from .qfield import FieldSpec, GaussRational, QuadExtElement, qf_format, qf_parse
from .sl2z import IntMatrix, STWord, convergents, st_decompose, st_multiply

__version__ = "0.1.0"

__all__ = [
    "FundamentalDomain", "RegionTag", "SignaturePresentation", "classify_point", "gamma_minus",
    "gamma_plus", "get_presentation", "validate_presentation", "FuchsDecompError", "Divisor",
    "TreeLabel", "enumerate_tree", "hecke_reps", "DecompResult", "GenWord", "HomologyClass",
    "decompose", "multiply_word", "MoebiusMap", "UHPoint", "isometry_circle", "FieldSpec",
    "GaussRational", "QuadExtElement", "qf_format", "qf_parse", "IntMatrix", "STWord",
    "convergents", "st_decompose", "st_multiply", "__version__",
]
