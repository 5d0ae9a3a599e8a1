"""Exact average orders and order distributions of wreath products."""

from .errors import (
    DisagreementError,
    PreconditionError,
    ResourceCapError,
    SpecParseError,
    WreathError,
)
from .exact import BigRational, bit_budget, rat, rat_pow, to_decimal
from .formulas import (
    KCoefficients,
    PGroupProfile,
    cor51_step,
    iterate_tower,
    k_coefficients,
    lemma2_cyclic_average,
    p_group_profile,
    psi,
    psi_tower,
    theorem1_average,
    theorem2_average,
    theorem3_check,
    theorem4_remainder,
    theorem5_distribution,
    theorem6_check,
    theorem7_sequence,
)
from .grammar import build_group, parse_spec
from .groups import (
    FiniteGroup,
    WreathElement,
    abelian,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    elementary_abelian,
    quaternion8,
    symmetric,
    wreath_product,
)
from .oracle import brute_force_spectrum, orbit_spectrum
from .spectra import (
    CumulativeOrderDistribution,
    OrderSpectrum,
    average_order,
    max_order,
    r_distribution,
    s_of_m,
    spectrum,
    t_invariant,
)

__version__ = "0.1.0"
