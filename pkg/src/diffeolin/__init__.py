"""Exact computations on finite-dimensional diffeological vector spaces:
dual spaces, smooth forms, pseudo-metrics, smooth splittings and the
induced metric on the dual."""

from .diffeospace import DiffSpace, GeneratorPlot, characteristic_subspace, is_standard_subspace, validate_space
from .dualmetric import DualMetric, induced_dual_metric, is_smooth_dual_metric, pseudo_metric_from_dual_metric
from .dualspace import DualBasis, dual_basis, psi, psi_inverse_on_v0
from .errors import DiffeoError
from .exactlin import Inertia, Matrix, Subspace, annihilator, column_space, jacobi_eigen, kernel, rref, solve, symmetric_inertia
from .forms import BilinearForm, canonical_pseudo_metric, is_pseudo_metric, is_smooth_form, signature_lemma_check, smooth_form_space
from .splitting import (
    SmoothSplit,
    admits_smooth_scalar_product,
    check_smooth_split,
    decompose,
    invariant_standard_part,
    probe_standard_summands,
)

__version__ = "0.1.0"
