#pragma once

#include "shapes.hpp"
#include "yang_baxter.hpp"

namespace macuv {

struct EvalOptions {
    bool simplify = true; // drop family<copy bosons inside the linear form
    int jobs = 1;         // orbit members evaluated in parallel when > 1
};

// f_mu(x_1..x_n;q,t;u,v) = rho(A_{mu_1}(x_1) ... A_{mu_n}(x_n) S), evaluated
// by a state-merged transfer over the r^2 boson modes: diagonal and vacuum
// modes track occupations against their bra states, traced modes run the
// symbolic twisted-trace calculus.
XPoly eval_f(const Composition& mu, int n, const EvalOptions& opts = {});

// Omega_lambda times the orbit sum of eval_f.
XPoly eval_P(const Partition& lambda, int n, const EvalOptions& opts = {});

// Same value through the A(x) = sum_j A_j(x) product; compositions outside
// the orbit contribute zero against the lambda bra.
XPoly eval_P_product(const Partition& lambda, int n, const EvalOptions& opts = {});

Report check_symmetry(const XPoly& p);

} // namespace macuv
