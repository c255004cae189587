"""Exact Hilbert-Kunz functions of normal affine semigroup rings.

The value ``l(k[M] / I^[q])`` is the number of lattice points in the dilation
``q P`` of a semi-open polycell ``P``; this package counts them exactly,
fits Ehrhart quasipolynomials, performs the Bruns-Gubeladze cell
decomposition and cross-checks everything against brute-force oracles.
"""

__version__ = "0.1.0"

from .bg import BGDecomposition, BGError, bg_decomposition, cells_in_polycell, classify_cells, hk_via_bg, volume_via_cells
from .cone import SupportHyperplanes, extreme_rays, support_hyperplanes
from .lattice import hermite_normal_form, is_full_lattice
from .oracles import (
    HypersurfacePresentation,
    InfeasibleSize,
    OracleError,
    fp_rank,
    hk_hypersurface,
    semigroup_bfs_hk,
)
from .polycell import (
    PolycellError,
    SemiOpenPolycell,
    build_polycell,
    count_lattice_points,
    hilbert_samuel_multiplicity,
    hk_value,
    membership,
    vertices,
)
from .quasipoly import (
    HKFunctionForm,
    QuasiPolynomial,
    QuasiPolynomialError,
    ehrhart_quasipolynomial,
    emit_latex,
    hk_coefficients,
    hk_form,
    interpolate,
    restrict_to_prime_powers,
)
from .render import emit_svg
from .semigroup import (
    AffineSemigroup,
    MonomialIdeal,
    SemigroupError,
    contains,
    is_normal,
    is_pointed,
    maximal_ideal,
    monomial_ideal,
    new_semigroup,
)
