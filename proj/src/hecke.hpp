#pragma once

#include "shapes.hpp"
#include "xpoly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace macuv {

// Pass/fail outcome of a verification run, with one line per sub-check.
struct Report {
    bool ok = true;
    std::vector<std::string> lines;

    void record(bool pass, const std::string& what) {
        ok = ok && pass;
        lines.push_back(std::string(pass ? "pass " : "FAIL ") + what);
    }
    std::string to_string() const;
};

// (p - swap_{i,i+1} p) / (x_i - x_{i+1}); always an exact division, a nonzero
// remainder would mean the transposition arithmetic is broken.
XPoly divided_difference(int i, const XPoly& p);

// T_i p = t p - (t x_i - x_{i+1}) * divided_difference(i, p).
XPoly apply_T(int i, const XPoly& p);

// Quadratic, braid and commutation relations on random polynomials.
Report check_hecke_relations(int n, int degree, int trials, unsigned seed);

using Family = std::map<Composition, XPoly>;

// Exchange relations on a family indexed by the orbit of a partition:
// mu_i > mu_{i+1}: T_i f_mu = f_{s_i mu};  mu_i = mu_{i+1}: T_i f_mu = t f_mu.
Report check_exchange(const Family& family);

XPoly symmetrize(const Family& family);

} // namespace macuv
