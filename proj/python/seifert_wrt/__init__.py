"""WRT invariants of Seifert manifolds with one exceptional fiber.

Exact Verlinde-number polynomial families, the level-k modular representation
and surgery pairing, character-variety components with their Chern-Simons
phases, and numerical verification of the large-level asymptotic expansion.
"""

from ._core import (
    bernoulli,
    build_family,
    components,
    compute_series,
    counting_via_pm,
    decompose_gluing,
    faulhaber,
    fusion_count_oracle,
    phi_basis_check,
    pm,
    rho_s_apply,
    rho_t_apply,
    s_entry,
    sigma_s1_state,
    sphase_verify,
    verify_dev_part,
    verify_seifert,
    verlinde_number,
    volume_vg,
    volume_vg_derivative,
    xi_direct,
    z_k,
)

__all__ = [
    "bernoulli",
    "build_family",
    "components",
    "compute_series",
    "counting_via_pm",
    "decompose_gluing",
    "faulhaber",
    "fusion_count_oracle",
    "phi_basis_check",
    "pm",
    "rho_s_apply",
    "rho_t_apply",
    "s_entry",
    "sigma_s1_state",
    "sphase_verify",
    "verify_dev_part",
    "verify_seifert",
    "verlinde_number",
    "volume_vg",
    "volume_vg_derivative",
    "xi_direct",
    "z_k",
]
