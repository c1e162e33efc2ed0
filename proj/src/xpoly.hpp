#pragma once

#include "ratfunc.hpp"

#include <numeric>
#include <vector>

namespace macuv {

struct GrlexLessVec {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

// Polynomial in x_1..x_n over RatFunc coefficients.
class XPoly {
public:
    using TermMap = std::map<std::vector<int>, RatFunc, GrlexLessVec>;

    XPoly() : nvars_(0) {}
    explicit XPoly(int nvars) : nvars_(nvars) {}

    static XPoly constant(int nvars, const RatFunc& c);
    static XPoly one(int nvars) { return constant(nvars, RatFunc(1)); }
    // 1-based variable index.
    static XPoly variable(int nvars, int i);
    static XPoly monomial(int nvars, const std::vector<int>& expo, const RatFunc& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    RatFunc coeff(const std::vector<int>& expo) const;

    XPoly operator-() const;
    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const RatFunc& c) const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const RatFunc& c);
    bool operator==(const XPoly& o) const;
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    XPoly pow(int e) const;

    // Variable indices below are 1-based, matching x1..xn.
    XPoly swap_x(int i, int j) const;
    XPoly substitute_x(int i, const XPoly& value) const;
    XPoly apply_permutation(const std::vector<int>& perm) const; // perm[k] = image of k+1
    XPoly substitute_params(const ParamBindings& bindings) const;

    bool symmetric_in(int i, int j) const { return swap_x(i, j) == *this; }
    bool is_symmetric() const;

    // Exact quotient by (x_i - x_j); nullopt when the remainder is nonzero.
    std::optional<XPoly> div_exact_linear(int i, int j) const;
    // Exact quotient by an arbitrary XPoly (used by oracle symmetrizations).
    std::optional<XPoly> div_exact(const XPoly& o) const;

    std::string to_text() const;
    std::string to_json() const;

    void add_term(const std::vector<int>& e, const RatFunc& c);

private:
    void check_compat(const XPoly& o) const;
    int nvars_;
    TermMap terms_;
};

inline XPoly operator*(const RatFunc& c, const XPoly& p) { return p * c; }

} // namespace macuv
