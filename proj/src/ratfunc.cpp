#include "ratfunc.hpp"

namespace macuv {

RatFunc::RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    if (!den_.is_one()) {
        ParamPoly g = ParamPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.div_exact(g);
            den_ = *den_.div_exact(g);
        }
        BigRat c = den_.content_signed();
        if (c != 1) {
            BigRat inv = 1 / c;
            den_ *= inv;
            num_ *= inv;
        }
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    RatFunc r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + -o; }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    RatFunc r;
    r.num_ = num_ * o.num_;
    if (den_.is_one()) {
        r.den_ = o.den_;
    } else if (o.den_.is_one()) {
        r.den_ = den_;
    } else {
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("RatFunc: division by zero");
    RatFunc r;
    r.num_ = num_ * o.den_;
    r.den_ = den_ * o.num_;
    r.reduce();
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return RatFunc(1) / pow(-e);
    RatFunc r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

RatFunc substitute_params(const ParamPoly& p, const ParamBindings& bindings) {
    RatFunc values[kNumParams];
    bool bound[kNumParams] = {false, false, false, false};
    for (const auto& [param, val] : bindings) {
        values[static_cast<int>(param)] = val;
        bound[static_cast<int>(param)] = true;
    }
    RatFunc acc;
    for (const auto& [e, c] : p.terms()) {
        RatFunc term{BigRat(c)};
        Expo4 kept{0, 0, 0, 0};
        for (int var = 0; var < kNumParams; ++var) {
            if (e[var] == 0) continue;
            if (bound[var]) {
                term *= values[var].pow(e[var]);
            } else {
                kept[var] = e[var];
            }
        }
        term *= RatFunc(ParamPoly::monomial(BigRat(1), kept));
        acc += term;
    }
    return acc;
}

RatFunc RatFunc::substitute_params(const ParamBindings& bindings) const {
    RatFunc den_val = macuv::substitute_params(den_, bindings);
    if (den_val.is_zero())
        throw Error("substitute_params: denominator vanishes identically under binding");
    return macuv::substitute_params(num_, bindings) / den_val;
}

std::string RatFunc::to_string() const {
    std::string ns = num_.to_string();
    if (num_.terms().size() > 1) ns = "(" + ns + ")";
    if (den_.is_one()) return ns;
    std::string ds = den_.to_string();
    return ns + "/(" + ds + ")";
}

ParamPoly monomial_qtuv(int eq, int et, int eu, int ev) {
    return ParamPoly::monomial(BigRat(1), Expo4{eq, et, eu, ev});
}

RatFunc one_minus_monomial(int eq, int et, int eu, int ev) {
    return RatFunc(ParamPoly(1) - monomial_qtuv(eq, et, eu, ev));
}

} // namespace macuv
