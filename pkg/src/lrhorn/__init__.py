"""Littlewood-Richardson coefficients, domino tableaux, and Horn-type
spectral inequalities, with exhaustive desk-scale verification sweeps."""

from .conjectures import (
    SweepReport,
    replay_violation,
    star_orbit,
    verify_schur_domination,
    verify_star_conjecture,
    verify_tau_domination,
)
from .decompose import (
    Block,
    RepaintStep,
    decompose_triple,
    repaint_canonicalize,
    validate_decomposition,
)
from .domino import (
    Domino,
    DominoTableau,
    cl_coefficient,
    count_ydt_by_weight,
    dilate_tableau,
    enumerate_domino_tableaux,
    is_valid_domino_tableau,
    is_valid_ydt,
    is_yamanouchi,
    reading_word,
)
from .horn import (
    CheckReport,
    HornTriple,
    LinearInequality,
    check_offdiag,
    check_pxyq,
    check_sv,
    combined_spectrum_cone,
    essential_triples,
    horn_cone_inequalities,
    horn_cone_membership,
    horn_triples,
    offdiag_inequalities,
    p1n2_complete,
    pxyq_inequalities,
    sv_inequalities,
    triple_map_ffg,
)
from .lr import SchurExpansion, lr_coefficient, lr_positive, schur_product
from .partitions import (
    complement,
    interlace_split,
    partition_from_set,
    set_from_partition,
    star_pair,
    star_sets,
    tau_partitions,
    tau_sets,
    two_quotient,
)
from .spectra import (
    SpectralReport,
    eigenvalues_sym,
    embed_blocks,
    random_with_spectrum,
    rotation_assembly,
    sample_verify_combined_cone,
    sample_verify_offdiag,
    sample_verify_theorem1,
    singular_values,
)

__version__ = "0.1.0"
