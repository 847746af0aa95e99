"""Defining binomial equations for affine simplicial toric varieties."""

from .config import Binomial, ToricConfiguration, parse_binomial
from .family import (
    FamilyParameters,
    build_family,
    extra_binomial,
    lemma1_ci_binomials,
    lemma1_configuration,
    p_power_rep,
    proposition2_check,
    proposition2_witness,
    theorem4_system,
)
from .gluing import (
    GluingCertificate,
    Leaf,
    Node,
    binomials_from_tree,
    check_gluing,
    check_p_gluing,
    completely_p_glued,
)
from .lattice import (
    IntegerLattice,
    hermite_basis,
    is_cyclic_generated_by,
    lattice_intersection,
    lattice_membership,
    semigroup_membership,
)
from .toric_ideal import binomial_in_ideal, enumerate_fiber, markov_basis, minimal_generator_count
from .verify import compare_systems, evaluate_binomial, parametrization_points, vanishing_set

__version__ = "0.1.0"
