"""dualbasis: exact ladder algebra for Bernoulli/Hermite bases, Clausen and
Hurwitz-side special-function evaluators with explicit truncation bounds,
principal-value quadrature for the singular pairing weights, and a
verification CLI that reproduces and audits the pairing tables."""

from .exact import (FormalSeries, Polynomial, Rational, bernoulli_egf,
                    bernoulli_number, bernoulli_poly, euler_number,
                    hermite_poly, poly_derivative, poly_eval, poly_eval_real)
from .ladder import (OperatorMatrix, annihilation_op, coherent_state_check,
                     commutator, creation_op, hermite_ladder,
                     hermite_poly_derivative_op, lowering_op, number_op,
                     raising_op)
from .pairing import (PairingReport, closed_form_alt, closed_form_sym,
                      full_report, pair_alt, pair_cross, pair_rotated,
                      pair_sym)
from .quadrature import (QuadratureConfig, WeightSpec, alt_weight,
                         convergence_probe, pv_integrate, rotated_weight,
                         sym_weight, weight_eval)
from .selector import (SelectorKernel, kernel_closed_form_j2, kernel_table,
                       kernel_value, lerch_selector_identity)
from .series import (DEFAULT_K, TruncatedSeries, bernoulli_fourier,
                     bernoulli_fourier_tail_bound, clausen_a,
                     clausen_a_tail_bound, clausen_c, clausen_c_tail_bound,
                     dirichlet_beta, dirichlet_beta_tail_bound, hurwitz_basis,
                     lerch_phi, lerch_tail_bound, poisson_lerch_bridge,
                     unit_phase, zeta, zeta_tail_bound)

__version__ = "0.1.0"
