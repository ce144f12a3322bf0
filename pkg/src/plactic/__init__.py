"""Type A crystal graphs, charge, Kostka-Foulkes polynomials and their
multivariate refinement, plus bounded rewriting for the type C plactic monoid."""

from .crystal import crystal_graph, eps, phi, sigma, omega2, string_exponents, d_stat, dprime_stat
from .cyclage import charge, charge_any_weight, cocharge, cyclage_graph, initial_cyclage
from .diagnostics import (
    CheckResult,
    KTooSmall,
    NonIntegerMean,
    NotDecreasing,
    PlacticError,
    RowTableau,
    ShapeInfeasible,
    SizeMismatch,
)
from .kostka import charge_kostka, lusztig_kostka, mean_kostka, q_kostant
from .multivariate import bold_kostka, build_lambda, completion, schur_poly, specialize, swap_involution
from .orbits import Orbit, fixed_points, mean_b, mean_bprime, orbit, orbits_of_shape
from .polynomials import MultiPoly, QPoly
from .tableaux import Tableau, enumerate_tableaux, insert, plactic_product, schensted, yamanouchi_tableau
from .typec import congruent, sp4_erase, sp_neighbors

__all__ = [
    "CheckResult", "KTooSmall", "MultiPoly", "NonIntegerMean", "NotDecreasing", "Orbit",
    "PlacticError", "QPoly", "RowTableau", "ShapeInfeasible", "SizeMismatch", "Tableau",
    "bold_kostka", "build_lambda", "charge", "charge_any_weight", "charge_kostka", "cocharge",
    "completion", "congruent", "crystal_graph", "cyclage_graph", "d_stat", "dprime_stat",
    "enumerate_tableaux", "eps", "fixed_points", "initial_cyclage", "insert", "lusztig_kostka",
    "mean_b", "mean_bprime", "mean_kostka", "omega2", "orbit", "orbits_of_shape", "phi",
    "plactic_product", "q_kostant", "schensted", "schur_poly", "sigma", "sp4_erase",
    "sp_neighbors", "specialize", "string_exponents", "swap_involution", "yamanouchi_tableau",
]
