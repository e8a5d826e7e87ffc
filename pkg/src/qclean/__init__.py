"""Exact verification of cleaning-lemma rank identities for quantum codes.

Stabilizer / CSS / subsystem code models over bit-packed GF(2) linear
algebra, the chain-complex (homology) view, the graded-lattice
abstraction covering both Grassmannians and finite abelian subgroup
lattices, and brute-force oracles for independent validation.
"""

from ._kernels import backend_name
from .codes import (
    CssCode,
    Region,
    StabilizerCode,
    SubsystemCode,
    clean,
    css_ells,
    css_to_stabilizer,
    distance_brute,
    distance_certify_lb,
    is_correctable,
    qubit_support,
    qubit_weight,
    region_subspace,
    stab_ell,
    subsystem_gs,
    tripartition_bound,
    universal_logops,
    verify_stab_cl,
)
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    InvariantViolationError,
    ParseError,
    QcleanError,
)
from .fileio import parse_code_file, serialize
from .gf2 import (
    BinaryMatrix,
    BinaryVector,
    fredholm_index_check,
    kernel_basis,
    rank,
    rref,
    solve,
)
from .generators import example_42, random_css, random_stabilizer, random_subsystem, toric
from .homology import ChainComplex2, betti1, duality_check, from_css, restricted_class_dim
from .lattice import (
    AbelianGroup,
    Bicharacter,
    GradedLatticeInstance,
    Subgroup,
    abelian_cl,
    abelian_cl_alternative,
    all_subgroups,
    dagger,
    factor_subgroup,
    generated_subgroup,
    subgroup_join,
    subgroup_meet,
    verify_graded_identity,
)
from .subspaces import (
    BilinearForm,
    Subspace,
    h_sigma,
    lagrangian_of,
    q_sigma_duality_check,
    quotient_dim,
    rho,
    span,
    verify_factor_annihilator,
    verify_orthospace_identity,
)

__version__ = "0.1.0"
