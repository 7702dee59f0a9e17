"""Reference values frozen from independent computations.

Each value was computed once at 50 significant digits with mpmath
(zeta, psi, stieltjes, e1, loggamma, polylog, altzeta) or, where noted,
from a closed form, and is stored here as a decimal string.
"""

from zetaforge.numerics import wp

# mpmath.zeta(3, 51)
ZETA_TAIL_3_50 = "0.000196039994668798465703976827223041983"
# -mpmath.zeta(2, 10001, derivative=1)
LOG_ZETA_TAIL_2_1E4 = "0.00102098798694748178531387768365269713"
# 2 zeta(3) - sum_{n<=1000} H_n / n^2, the partial sum in exact rationals
HARMONIC_TAIL_2_1000 = "0.0084814793449622014025011229679476433"
ZETA3 = "1.20205690315959428539973816151144999"
HURWITZ_2_5_0_3 = "21.0692392022477230269553583240838467"
ETA_HALF = "0.6048986434216303702472659142359555"
H_1E6 = "14.3927267228657236313811274931885877"
GAMMA1 = "-0.0728158454836767248605863758749013191"
GAMMA1_HALF = "-1.3534596808049415177086871691780644"
E1_OF_1 = "0.219383934395520273677163775460121649"
LOG_GAMMA_3_7 = "1.42807232666538792187238112504755033"
IM_LOG_GAMMA_1_PLUS_I = "-0.301640320467533197887531657796896541"
ATAN_HALF = "0.463647609000806116214256231461214402"
ZETA_PRIME_2 = "-0.937548254315843753702574094567864978"
TRIGAMMA_0_7 = "2.83404915669461062684564398100791865"
DIGAMMA_0_125 = "-8.388492663295854867802742923086343"
POLYGAMMA_4_2_5 = "-0.313755999506731363375428096872927207"
LI2_HALF = "0.582240526465012505902656320159680109"
LI3_MINUS_1 = "-0.901542677369695714049803621133587493"
# (1 - 2^-1/4) zeta(5/4)
ETA_FACTOR_ZETA_1_25 = "0.731098763801661241748400389665982294"
# sum_{n>=2} ln((n+1)/n)/n
LOG_RATIO_OVER_N = "0.56459970638442432059266770903770496"

# xi(x) from (psi'(x) - zeta(2) - (psi(x) + gamma)^2) / 2 with mpmath psi
XI = {
    "0.25": "1.11407929560596271729214588553366723",
    "0.5": "0.684028039011823587138210113992695246",
    "1.5": "-0.543383238748395175192861400174598482",
    "2": "-1",
    "5": "-2.88194444444444444444444444444444444",
}
XI_1E_4 = "1.64469366899550156586715968547014314"
# (zeta(2) - gamma^2 - 2 gamma_1) / 2
XI_MEAN = "0.7286939170039306059376058910202918"
# 3 + gamma^2 + 2 gamma_1 - pi^2/3
E1_1_CLOSED = "-0.10232190085608764834762694868660879"


def mp(text):
    return wp.mpf(text)


def close(er, ref, tol) -> bool:
    """|er - ref| <= tol for an ExtendedReal ``er``."""
    return float(abs(er.value - wp.mpf(ref))) <= tol
