#include "hecke.hpp"

#include <random>
#include <sstream>

namespace macuv {

std::string Report::to_string() const {
    std::ostringstream out;
    for (const auto& line : lines) out << line << "\n";
    out << (ok ? "OK" : "FAILED") << "\n";
    return out.str();
}

XPoly divided_difference(int i, const XPoly& p) {
    XPoly diff = p - p.swap_x(i, i + 1);
    auto quot = diff.div_exact_linear(i, i + 1);
    if (!quot) throw Error("divided_difference: non-exact division (internal bug)");
    return *quot;
}

XPoly apply_T(int i, const XPoly& p) {
    if (i < 1 || i >= p.nvars()) throw Error("apply_T: index out of range");
    int n = p.nvars();
    RatFunc t = RatFunc::variable(Param::t);
    XPoly txi_minus_xnext = XPoly::variable(n, i) * t - XPoly::variable(n, i + 1);
    return p * t - txi_minus_xnext * divided_difference(i, p);
}

namespace {

XPoly random_xpoly(int n, int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> expo(0, degree);
    XPoly p(n);
    int terms = 3 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> e(n);
        for (int v = 0; v < n; ++v) e[v] = expo(rng);
        p.add_term(e, RatFunc(BigRat(coef(rng))));
    }
    return p;
}

} // namespace

Report check_hecke_relations(int n, int degree, int trials, unsigned seed) {
    Report report;
    std::mt19937 rng(seed);
    RatFunc t = RatFunc::variable(Param::t);
    int quad_fail = 0, braid_fail = 0, comm_fail = 0;
    for (int trial = 0; trial < trials; ++trial) {
        XPoly p = random_xpoly(n, degree, rng);
        for (int i = 1; i < n; ++i) {
            // (T_i - t)(T_i + 1) p = 0
            XPoly tp = apply_T(i, p);
            XPoly lhs = apply_T(i, tp) - tp * t + tp - p * t;
            if (!lhs.is_zero()) {
                ++quad_fail;
                report.record(false, "quadratic relation i=" + std::to_string(i) +
                                         " witness " + p.to_text());
            }
        }
        for (int i = 1; i + 1 < n; ++i) {
            XPoly lhs = apply_T(i, apply_T(i + 1, apply_T(i, p)));
            XPoly rhs = apply_T(i + 1, apply_T(i, apply_T(i + 1, p)));
            if (lhs != rhs) {
                ++braid_fail;
                report.record(false, "braid relation i=" + std::to_string(i) +
                                         " witness " + p.to_text());
            }
        }
        for (int i = 1; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) {
                XPoly lhs = apply_T(i, apply_T(j, p));
                XPoly rhs = apply_T(j, apply_T(i, p));
                if (lhs != rhs) {
                    ++comm_fail;
                    report.record(false, "commutation i=" + std::to_string(i) + " j=" +
                                             std::to_string(j) + " witness " + p.to_text());
                }
            }
        }
    }
    report.record(quad_fail == 0, "quadratic (T_i - t)(T_i + 1) = 0 on " +
                                      std::to_string(trials) + " random polynomials");
    report.record(braid_fail == 0, "braid T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}");
    report.record(comm_fail == 0, "commutation T_i T_j = T_j T_i for |i-j| > 1");
    return report;
}

Report check_exchange(const Family& family) {
    Report report;
    if (family.empty()) throw Error("check_exchange: empty family");
    int n = static_cast<int>(family.begin()->first.size());
    Partition lambda = sort_to_partition(family.begin()->first);
    for (const auto& mu : orbit(lambda, n)) {
        if (!family.count(mu)) throw Error("check_exchange: missing orbit member");
    }
    RatFunc t = RatFunc::variable(Param::t);
    for (const auto& [mu, f] : family) {
        for (int i = 1; i < n; ++i) {
            std::ostringstream what;
            what << "mu=(";
            for (size_t k = 0; k < mu.size(); ++k) what << (k ? "," : "") << mu[k];
            what << ") i=" << i;
            if (mu[i - 1] > mu[i]) {
                Composition swapped = mu;
                std::swap(swapped[i - 1], swapped[i]);
                report.record(apply_T(i, f) == family.at(swapped),
                              "T_i f_mu = f_{s_i mu} at " + what.str());
            } else if (mu[i - 1] == mu[i]) {
                report.record(apply_T(i, f) == f * t, "T_i f_mu = t f_mu at " + what.str());
            }
        }
    }
    return report;
}

XPoly symmetrize(const Family& family) {
    if (family.empty()) throw Error("symmetrize: empty family");
    int n = static_cast<int>(family.begin()->first.size());
    Partition lambda = sort_to_partition(family.begin()->first);
    XPoly sum(n);
    for (const auto& mu : orbit(lambda, n)) {
        auto it = family.find(mu);
        if (it == family.end()) throw Error("symmetrize: missing orbit member");
        sum += it->second;
    }
    return sum;
}

} // namespace macuv
