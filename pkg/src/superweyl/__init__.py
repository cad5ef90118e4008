"""Exact Clifford/Weyl superalgebra arithmetic and twisted-Weyl tooling.

The package is organized around one signature type and five layers:

- ``algebra``: normal-form arithmetic in the superalgebra (SuperElement)
- ``basering``: the degree-zero polynomial ring, its shift automorphisms,
  and the two bridges (iota_embed, project_zero)
- ``datum``: integer-matrix validation and the derived (t, sigma, mu) data
- ``support``: graded-support membership, enumeration, and injectivity
- ``liesuper``: Chevalley presentations checked against operator images

Everything is pure and immutable; all indices are 0-based in the library
and 1-based in rendered output and the CLI.
"""

from .algebra import (
    Signature,
    SuperElement,
    SuperMonomial,
    degree_of,
    elem_add,
    elem_mul,
    involution,
    mono_mul,
    power_gen,
    render_element,
    scalar_mul,
    word_element,
)
from .basering import (
    BaseRingElement,
    equals,
    iota_embed,
    project_zero,
    render_ring_element,
    tau_apply,
)
from .datum import (
    GammaMatrix,
    GradedElement,
    TgwDatum,
    consistency_check,
    derive_datum,
    derive_mu,
    derive_sigma,
    derive_t,
    eval_word,
    gamma_from_dict,
    gamma_to_dict,
    gradation_pair,
    identity_gamma,
    phi_generator,
    validate_gamma,
)
from .errors import (
    InhomogeneityError,
    InvalidGammaError,
    NilpotencyError,
    ResourceCapError,
    SignatureMismatchError,
    SuperweylError,
    UndefinedDegreeError,
)
from .liesuper import (
    Calibration,
    LiePreset,
    calibrate,
    check_relations,
    check_triangle,
    load_calibration,
    preset,
    super_bracket,
    zeta_matrix,
)
from .support import (
    enumerate_support,
    gamma_rank_kernel,
    injectivity_report,
    is_in_support,
    oracle_membership,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BaseRingElement",
    "Calibration",
    "GammaMatrix",
    "GradedElement",
    "InhomogeneityError",
    "InvalidGammaError",
    "LiePreset",
    "NilpotencyError",
    "ResourceCapError",
    "Signature",
    "SignatureMismatchError",
    "SuperElement",
    "SuperMonomial",
    "SuperweylError",
    "TgwDatum",
    "UndefinedDegreeError",
    "calibrate",
    "check_relations",
    "check_triangle",
    "consistency_check",
    "degree_of",
    "derive_datum",
    "derive_mu",
    "derive_sigma",
    "derive_t",
    "elem_add",
    "elem_mul",
    "enumerate_support",
    "equals",
    "eval_word",
    "gamma_from_dict",
    "gamma_rank_kernel",
    "gamma_to_dict",
    "gradation_pair",
    "identity_gamma",
    "injectivity_report",
    "involution",
    "iota_embed",
    "is_in_support",
    "load_calibration",
    "mono_mul",
    "oracle_membership",
    "phi_generator",
    "power_gen",
    "preset",
    "project_zero",
    "render_element",
    "render_ring_element",
    "scalar_mul",
    "super_bracket",
    "tau_apply",
    "validate_gamma",
    "verify_witness",
    "word_element",
    "zeta_matrix",
]
