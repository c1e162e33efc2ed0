#include "special.hpp"

#include "lattice.hpp"

#include <algorithm>
#include <numeric>

namespace macuv {

XPoly monomial_sym(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n) return XPoly(n);
    XPoly m(n);
    for (const auto& mu : orbit(lambda, n)) m.add_term(mu, RatFunc(1));
    return m;
}

namespace {

XPoly power_sum(int k, int n) {
    XPoly p(n);
    for (int i = 1; i <= n; ++i) p += XPoly::variable(n, i).pow(k);
    return p;
}

XPoly power_sum_product(const Partition& rho, int n) {
    XPoly p = XPoly::one(n);
    for (int part : rho.parts()) {
        if (part > 0) p = p * power_sum(part, n);
    }
    return p;
}

BigRat z_factor(const Partition& rho) {
    BigRat z(1);
    int max_part = rho.rank();
    for (int i = 1; i <= max_part; ++i) {
        int mult = multiplicity(rho.parts(), i);
        for (int j = 1; j <= mult; ++j) z *= BigRat(i * j);
    }
    return z;
}

// Expand a symmetric polynomial in the monomial basis by peeling leading terms.
std::map<std::vector<int>, RatFunc> to_monomial_basis(XPoly f, int n) {
    std::map<std::vector<int>, RatFunc> coeffs;
    while (!f.is_zero()) {
        auto lead = *f.terms().rbegin();
        std::vector<int> sorted = lead.first;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != lead.first)
            throw Error("to_monomial_basis: input not symmetric");
        Partition mu(sorted);
        coeffs[sorted] = lead.second;
        f -= monomial_sym(mu, n) * lead.second;
    }
    return coeffs;
}

// Partitions of d in descending lex order (a linear extension of dominance).
std::vector<Partition> partitions_desc(int d) {
    auto parts = partitions_of(d, d, d);
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return parts;
}

std::vector<std::vector<RatFunc>> invert_matrix(std::vector<std::vector<RatFunc>> a) {
    size_t dim = a.size();
    std::vector<std::vector<RatFunc>> inv(dim, std::vector<RatFunc>(dim));
    for (size_t i = 0; i < dim; ++i) inv[i][i] = RatFunc(1);
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && a[pivot][col].is_zero()) ++pivot;
        if (pivot == dim) throw Error("invert_matrix: singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        RatFunc diag = a[col][col];
        for (size_t j = 0; j < dim; ++j) {
            a[col][j] = a[col][j] / diag;
            inv[col][j] = inv[col][j] / diag;
        }
        for (size_t row = 0; row < dim; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            RatFunc factor = a[row][col];
            for (size_t j = 0; j < dim; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

XPoly macdonald_reference(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n)
        throw Error("macdonald_reference: n smaller than the number of parts");
    int d = lambda.weight();
    if (d == 0) return XPoly::one(n);

    // Work in d variables so every m_mu with |mu| = d is faithful, then
    // restrict the final expansion to n variables.
    int big = d;
    auto parts = partitions_desc(d);
    size_t dim = parts.size();

    // p_rho in the monomial basis.
    std::vector<std::vector<RatFunc>> p_to_m(dim, std::vector<RatFunc>(dim));
    for (size_t r = 0; r < dim; ++r) {
        auto coeffs = to_monomial_basis(power_sum_product(parts[r], big), big);
        for (size_t m = 0; m < dim; ++m) {
            std::vector<int> key = parts[m].parts();
            key.resize(big, 0);
            auto it = coeffs.find(key);
            if (it != coeffs.end()) p_to_m[r][m] = it->second;
        }
    }
    auto m_to_p = invert_matrix(p_to_m);

    // <m_mu, m_nu> through the power-sum norm z_rho prod (1-q^{rho_i})/(1-t^{rho_i}).
    std::vector<RatFunc> p_norm(dim);
    for (size_t r = 0; r < dim; ++r) {
        RatFunc norm{BigRat(z_factor(parts[r]))};
        for (int part : parts[r].parts())
            norm *= one_minus_monomial(part, 0) / one_minus_monomial(0, part);
        p_norm[r] = norm;
    }
    auto gram = [&](size_t a, size_t b) {
        RatFunc s;
        for (size_t r = 0; r < dim; ++r) s += m_to_p[a][r] * m_to_p[b][r] * p_norm[r];
        return s;
    };

    // Gram-Schmidt down the dominance-compatible order: coefficients c with
    // <m_lambda + sum_j c_j m_j, m_i> = 0 for every i preceding lambda.
    size_t lam_idx = 0;
    while (lam_idx < dim && !(parts[lam_idx] == lambda)) ++lam_idx;
    if (lam_idx == dim) throw Error("macdonald_reference: partition not found");

    std::vector<RatFunc> coeff(dim);
    coeff[lam_idx] = RatFunc(1);
    if (lam_idx + 1 < dim) {
        size_t tail = dim - lam_idx - 1;
        std::vector<std::vector<RatFunc>> sys(tail, std::vector<RatFunc>(tail));
        std::vector<RatFunc> rhs(tail);
        for (size_t i = 0; i < tail; ++i) {
            for (size_t j = 0; j < tail; ++j) sys[i][j] = gram(lam_idx + 1 + j, lam_idx + 1 + i);
            rhs[i] = -gram(lam_idx, lam_idx + 1 + i);
        }
        auto sys_inv = invert_matrix(sys);
        for (size_t j = 0; j < tail; ++j) {
            RatFunc c;
            for (size_t i = 0; i < tail; ++i) c += sys_inv[j][i] * rhs[i];
            coeff[lam_idx + 1 + j] = c;
        }
    }

    XPoly result(n);
    for (size_t m = lam_idx; m < dim; ++m) {
        if (coeff[m].is_zero()) continue;
        result += monomial_sym(parts[m], n) * coeff[m];
    }
    return result;
}

namespace {

// All permutations of 1..n with signs, in lexicographic order.
void for_permutations(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        fn(perm, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

XPoly vandermonde_quotient(XPoly numer, int n) {
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            auto q = numer.div_exact_linear(i, j);
            if (!q) throw Error("vandermonde_quotient: antisymmetrization not divisible");
            numer = *q;
        }
    }
    return numer;
}

} // namespace

RatFunc hl_normalizer(const Partition& lambda, int n) {
    std::vector<int> padded = lambda.parts();
    padded.resize(n, 0);
    RatFunc v(1);
    RatFunc one_minus_t = one_minus_monomial(0, 1);
    for (int i = 0; i <= lambda.rank(); ++i) {
        int mult = multiplicity(padded, i);
        for (int j = 1; j <= mult; ++j) v *= one_minus_monomial(0, j) / one_minus_t;
    }
    return v;
}

XPoly hall_littlewood_reference(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n)
        throw Error("hall_littlewood_reference: n smaller than the number of parts");
    std::vector<int> padded = lambda.parts();
    padded.resize(n, 0);
    RatFunc t = RatFunc::variable(Param::t);

    XPoly core(n);
    {
        XPoly prod = XPoly::monomial(n, padded, RatFunc(1));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                prod = prod * (XPoly::variable(n, i) - XPoly::variable(n, j) * t);
        core = prod;
    }
    XPoly alternating(n);
    for_permutations(n, [&](const std::vector<int>& perm, int sign) {
        XPoly term = core.apply_permutation(perm);
        alternating += sign > 0 ? term : -term;
    });
    XPoly sym = vandermonde_quotient(alternating, n);
    return sym * (RatFunc(1) / hl_normalizer(lambda, n));
}

XPoly schur_reference(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n)
        throw Error("schur_reference: n smaller than the number of parts");
    std::vector<int> shifted = lambda.parts();
    shifted.resize(n, 0);
    for (int i = 0; i < n; ++i) shifted[i] += n - 1 - i;
    XPoly alternating(n);
    for_permutations(n, [&](const std::vector<int>& perm, int sign) {
        XPoly term = XPoly::monomial(n, shifted, RatFunc(1)).apply_permutation(perm);
        alternating += sign > 0 ? term : -term;
    });
    return vandermonde_quotient(alternating, n);
}

XPoly bp_matrix_product(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n)
        throw Error("bp_matrix_product: sum of multiplicities exceeds n");
    int r = lambda.rank();
    if (r == 0) return XPoly::one(n);
    std::vector<int> target(r);
    for (int i = 1; i <= r; ++i) target[i - 1] = multiplicity(lambda.parts(), i);

    RatFunc u = RatFunc::variable(Param::u);
    RatFunc v = RatFunc::variable(Param::v);
    auto t_pow = [](int m) { return RatFunc(monomial_qtuv(0, m)); };

    // State: occupation per copy; weights are polynomials in x_1..x_n.
    std::map<std::vector<int>, XPoly> states;
    states[std::vector<int>(r, 0)] = XPoly::one(n);
    for (int a = n; a >= 1; --a) {
        XPoly xa = XPoly::variable(n, a);
        std::map<std::vector<int>, XPoly> next;
        auto emit = [&](const std::vector<int>& occ, XPoly w) {
            if (w.is_zero()) return;
            auto [it, inserted] = next.try_emplace(occ, w);
            if (!inserted) it->second += w;
        };
        for (const auto& [occ, weight] : states) {
            // Thread the horizontal state h through copies 1..r; h must leave
            // the last copy empty. T_{h0}-sum means h in {0,1} at entry.
            struct Slot {
                std::vector<int> occ;
                XPoly w;
                int h;
            };
            std::vector<Slot> frontier;
            frontier.push_back({occ, weight, 0});
            frontier.push_back({occ, weight, 1});
            for (int copy = 0; copy < r; ++copy) {
                std::vector<Slot> after;
                for (const auto& slot : frontier) {
                    int m = slot.occ[copy];
                    if (slot.h == 0) {
                        // L00: stay
                        after.push_back(
                            {slot.occ, slot.w * (XPoly::one(n) - xa * (u * t_pow(m))), 0});
                        // L01: annihilate, emit horizontal
                        if (m >= 1) {
                            auto occ2 = slot.occ;
                            occ2[copy] = m - 1;
                            after.push_back({occ2, slot.w * ((RatFunc(1) - t_pow(m)) *
                                                             (RatFunc(1) - u * v * t_pow(m - 1))),
                                             1});
                        }
                    } else {
                        // L10: create
                        auto occ2 = slot.occ;
                        occ2[copy] = m + 1;
                        after.push_back({occ2, slot.w * xa, 0});
                        // L11: pass through
                        after.push_back({slot.occ, slot.w * (xa - XPoly::constant(n, v * t_pow(m))), 1});
                    }
                }
                frontier = std::move(after);
            }
            for (const auto& slot : frontier) {
                if (slot.h == 0) emit(slot.occ, slot.w);
            }
        }
        // Budget prune: each remaining factor raises the total by at most 1.
        int want = std::accumulate(target.begin(), target.end(), 0);
        for (auto it = next.begin(); it != next.end();) {
            int total = std::accumulate(it->first.begin(), it->first.end(), 0);
            bool feasible = true;
            for (int copy = 0; copy < r; ++copy)
                feasible = feasible && it->first[copy] <= n;
            feasible = feasible && want - total <= a - 1 && total - want <= a - 1;
            it = feasible ? std::next(it) : next.erase(it);
        }
        states = std::move(next);
    }
    auto it = states.find(target);
    return it == states.end() ? XPoly(n) : it->second;
}

XPoly bp_symmetrization(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n)
        throw Error("bp_symmetrization: sum of multiplicities exceeds n");
    std::vector<int> padded = lambda.parts();
    padded.resize(n, 0);
    int r = lambda.rank();
    if (r == 0) return XPoly::one(n);
    RatFunc u = RatFunc::variable(Param::u);
    RatFunc v = RatFunc::variable(Param::v);

    // One symmetrization term with every apparent denominator cleared:
    // prod_{i<j} (x_i - t x_j) * prod_i (x_i - v)^{lambda_i - [lambda_i>0]}
    //   * x_i^{[lambda_i>0]} * (1 - x_i u)^{lambda_1 - lambda_i},
    // summed with signs and divided by the Vandermonde.
    XPoly core = XPoly::one(n);
    RatFunc t = RatFunc::variable(Param::t);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            core = core * (XPoly::variable(n, i) - XPoly::variable(n, j) * t);
    for (int i = 1; i <= n; ++i) {
        XPoly xi = XPoly::variable(n, i);
        int li = padded[i - 1];
        int ind = li > 0 ? 1 : 0;
        core = core * (xi - XPoly::constant(n, v)).pow(li - ind);
        core = core * xi.pow(ind);
        core = core * (XPoly::one(n) - xi * u).pow(r - li);
    }
    XPoly alternating(n);
    for_permutations(n, [&](const std::vector<int>& perm, int sign) {
        XPoly term = core.apply_permutation(perm);
        alternating += sign > 0 ? term : -term;
    });
    XPoly sym = vandermonde_quotient(alternating, n);
    return sym * (RatFunc(1) / hl_normalizer(lambda, n));
}

XFraction bp_convention_map(const Partition& lambda, int n, const XPoly& f_shifted) {
    XPoly num = f_shifted.substitute_params({{Param::u, RatFunc::variable(Param::v)}});
    for (int i = 1; i <= n; ++i) {
        XPoly xi = XPoly::variable(n, i);
        auto q = num.div_exact(xi);
        if (!q) throw Error("bp_convention_map: numerator not divisible by x_i");
        num = *q;
    }
    XPoly den = XPoly::one(n);
    RatFunc v = RatFunc::variable(Param::v);
    for (int i = 1; i <= n; ++i)
        den = den * (XPoly::one(n) - XPoly::variable(n, i) * v).pow(lambda.rank() + 1);
    return {num, den};
}

Report check_macdonald_reduction(const Partition& lambda, int n) {
    Report report;
    ParamBindings at_zero{{Param::u, RatFunc()}, {Param::v, RatFunc()}};
    XPoly reduced = eval_P(lambda, n).substitute_params(at_zero);
    XPoly reference = macdonald_reference(lambda, n);
    report.record(reduced == reference,
                  "P" + lambda.to_string() + " at u=v=0 equals the Macdonald reference, n=" +
                      std::to_string(n));
    return report;
}

Report check_bp_reduction(const Partition& lambda, int n) {
    Report report;
    ParamBindings q_zero{{Param::q, RatFunc()}};
    XPoly via_mpa = eval_P(lambda, n).substitute_params(q_zero);
    XPoly via_rank1 = bp_matrix_product(lambda, n);
    XPoly via_sym = bp_symmetrization(lambda, n);
    XPoly via_lattice = partition_function_P(lambda, n);
    std::string tag = lambda.to_string() + " n=" + std::to_string(n);
    report.record(via_mpa == via_rank1, "P|q=0 = rank-1 matrix product at " + tag);
    report.record(via_rank1 == via_sym, "rank-1 matrix product = symmetrization at " + tag);
    report.record(via_rank1 == via_lattice, "rank-1 matrix product = lattice sum at " + tag);
    return report;
}

} // namespace macuv
