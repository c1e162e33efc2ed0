#pragma once

#include "bigrat.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace macuv {

// The four deformation parameters, in canonical variable order.
enum class Param : int { q = 0, t = 1, u = 2, v = 3 };

constexpr int kNumParams = 4;

using Expo4 = std::array<int, 4>;

// Graded lexicographic: total degree first, ties broken by (e_q,e_t,e_u,e_v).
struct GrlexLess4 {
    bool operator()(const Expo4& a, const Expo4& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a < b;
    }
};

// Polynomial in q,t,u,v over exact rationals. Terms are kept in canonical
// (graded lex) order with no zero coefficients stored.
class ParamPoly {
public:
    using TermMap = std::map<Expo4, BigRat, GrlexLess4>;

    ParamPoly() = default;
    explicit ParamPoly(const BigRat& c);
    explicit ParamPoly(long c) : ParamPoly(BigRat(c)) {}

    static ParamPoly variable(Param p, int exp = 1);
    static ParamPoly monomial(const BigRat& c, const Expo4& e);
    static ParamPoly one() { return ParamPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    BigRat constant_value() const; // requires is_constant()

    const TermMap& terms() const { return terms_; }
    int total_degree() const;
    int degree_in(int var) const;
    // First coefficient in canonical order (the "leading" coefficient used
    // for sign normalization). Requires nonzero.
    const BigRat& lead_coeff() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const BigRat& c);
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly pow(int e) const;

    // Exact quotient, or nullopt if o does not divide this.
    std::optional<ParamPoly> div_exact(const ParamPoly& o) const;

    // Polynomial gcd, normalized to primitive integer coefficients with
    // positive leading coefficient. gcd(0,0) = 0.
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    // Rational content c > 0 such that this/c has coprime integer
    // coefficients; sign is carried so the result has positive lead.
    BigRat content_signed() const;
    ParamPoly primitive_part() const;

    std::string to_string() const;

private:
    void add_term(const Expo4& e, const BigRat& c);
    friend class RatFunc;
    TermMap terms_;
};

std::string param_name(Param p);

} // namespace macuv
