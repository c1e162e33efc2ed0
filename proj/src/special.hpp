#pragma once

#include "mpa.hpp"

namespace macuv {

// Monomial symmetric polynomial m_lambda in n variables (zero if lambda has
// more than n nonzero parts).
XPoly monomial_sym(const Partition& lambda, int n);

// Monic Macdonald polynomial P_lambda(x;q,t) by Gram-Schmidt on the monomial
// basis against the (q,t) power-sum scalar product, dominance-triangular.
// Independent of the matrix-product code path.
XPoly macdonald_reference(const Partition& lambda, int n);

// Hall-Littlewood P_lambda(x;t) by explicit symmetrization.
XPoly hall_littlewood_reference(const Partition& lambda, int n);

// Schur polynomial by the bialternant ratio.
XPoly schur_reference(const Partition& lambda, int n);

// v_lambda(t) = prod_{i>=0} prod_{j=1}^{m_i} (1-t^j)/(1-t), with m_0 counting
// the zero parts among n.
RatFunc hl_normalizer(const Partition& lambda, int n);

// F_lambda(x_1..x_n;t;u,v) as a rank-1 monodromy expectation value over
// lambda_1 copies (truncated Fock, standard normalization).
XPoly bp_matrix_product(const Partition& lambda, int n);

// Same function by the explicit sum over the symmetric group; asserts that
// the apparent poles at x_i = x_j cancel.
XPoly bp_symmetrization(const Partition& lambda, int n);

// A rational expression num/den in the x variables.
struct XFraction {
    XPoly num;
    XPoly den;
};

// Borodin-normalized function: F_{(lambda+1)} / prod_i x_i (1-x_i u)^{lambda_1+1}
// at u = v (v playing the role of the single spin parameter).
XFraction bp_convention_map(const Partition& lambda, int n, const XPoly& f_shifted);

Report check_macdonald_reduction(const Partition& lambda, int n);
Report check_bp_reduction(const Partition& lambda, int n);

} // namespace macuv
