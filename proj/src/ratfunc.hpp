#pragma once

#include "parampoly.hpp"

#include <map>

namespace macuv {

// Bindings for substitute_params; values may themselves involve parameters,
// e.g. {u -> v} realizes the common "u = v = s" specialisation with v as s.
class RatFunc;
using ParamBindings = std::map<Param, RatFunc>;

// Element of the field Q(q,t,u,v), kept reduced: gcd(num,den) trivial, den a
// primitive integer polynomial with positive leading coefficient, den = 1 for
// polynomial values.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const ParamPoly& p) : num_(p), den_(1) {}
    RatFunc(ParamPoly num, ParamPoly den);

    static RatFunc variable(Param p) { return RatFunc(ParamPoly::variable(p)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(int e) const;

    RatFunc substitute_params(const ParamBindings& bindings) const;

    std::string to_string() const;

private:
    void reduce();
    ParamPoly num_, den_;
};

// Convenience builders for the ubiquitous 1 - q^a t^b u^c v^d binomials.
RatFunc one_minus_monomial(int eq, int et, int eu = 0, int ev = 0);
ParamPoly monomial_qtuv(int eq, int et, int eu = 0, int ev = 0);

RatFunc substitute_params(const ParamPoly& p, const ParamBindings& bindings);

} // namespace macuv
