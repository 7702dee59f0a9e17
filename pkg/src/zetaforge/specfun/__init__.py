"""Special functions and constants on the real half-lines the identities need."""

from ..constants import ConstantEntry, ConstantsCache, constants
from .elementary import arccot_series, polylog_int
from .gamma import (digamma, harmonic_number, im_log_gamma_one_plus_i, im_log_gamma_unit,
                    log_gamma, polygamma, upper_gamma0)
from .oracles import constant_oracles, euler_gamma_oracle, machin_pi
from .stieltjes import stieltjes_gamma1
from .zeta import (dirichlet_eta, eta_alternating, hurwitz_zeta, hurwitz_zeta_deriv, zeta,
                   zeta_minus_one)

__all__ = [
    "ConstantEntry", "ConstantsCache", "constants", "arccot_series", "polylog_int",
    "digamma", "harmonic_number", "im_log_gamma_one_plus_i", "im_log_gamma_unit",
    "log_gamma", "polygamma", "upper_gamma0", "constant_oracles", "euler_gamma_oracle",
    "machin_pi", "stieltjes_gamma1", "dirichlet_eta", "eta_alternating", "hurwitz_zeta",
    "hurwitz_zeta_deriv", "zeta", "zeta_minus_one",
]
