"""Categorical entropy of compositions of two spherical twists."""
from .errors import (
    AmbiguousConnectingMap,
    BraidWordError,
    CatentError,
    GapConditionFails,
    InconsistentInput,
    MissingAmbientHypothesis,
    PossiblyIsomorphicPair,
)
from .laurent_poly import Laurent1, Laurent2, evaluate_int, lp_mul, parse_laurent1, specialize_cy
from .graded_space import GradedDim, find_shift, gap_check, hom_dims, lemma_vanishing_check, shift
from .serre_entropy import EntropyValue, closed_form_dim, h0_serre, recurrence_dims, total_cohom_dim
from .twist_entropy import EntropyProfile, entropy_profile, h0_composition, spherical_twist_profile
from .k_theory import EulerLattice, KTReport, Verdict, composition_matrix, kt_verdict, log_spectral_radius, torelli_check
from .cy_hypersurface import build_kt_example, hypersurface_section_cohom
from .ks_braid import BraidWord, TwistedComplex, hom_poincare, parse_braid, reachable_pair_report

__version__ = "0.1.0"
