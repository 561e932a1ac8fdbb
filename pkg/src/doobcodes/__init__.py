"""1-perfect codes in Doob graphs D(m, n): linear, additive and product constructions."""

from .rings import GF4, GR16, CosetClass, coset_class, hat, tilde, unit_decompose
from .space import DoobSpace, DoobVertex, MixedSpace, MixedVertex, WeightOneMove, MoveKind
from .params import classify, group_params, linear_params, mu_for, product_bound, product_kr
from .linear import CheckMatrixE, build_check_matrix
from .additive import CheckMatrixZ, build_D, expand_matrix, select_lambdas, special_d77
from .product import ProductCodeSpec, product_decode, product_membership
from .verify import verify_coverage, verify_exhaustive, verify_sampled

__version__ = "0.1.0"
