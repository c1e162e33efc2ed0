#include "parampoly.hpp"

#include <algorithm>
#include <sstream>

namespace macuv {

namespace {

const char* kParamNames[kNumParams] = {"q", "t", "u", "v"};

// Highest variable index that actually occurs, or -1 for constants.
int main_variable(const ParamPoly& a, const ParamPoly& b) {
    for (int var = kNumParams - 1; var >= 0; --var) {
        if (a.degree_in(var) > 0 || b.degree_in(var) > 0) return var;
    }
    return -1;
}

// Coefficients of p viewed as univariate in `var`; keys are the exponent of
// `var`, values have that exponent stripped.
std::map<int, ParamPoly> univariate_view(const ParamPoly& p, int var) {
    std::map<int, ParamPoly> view;
    for (const auto& [e, c] : p.terms()) {
        Expo4 rest = e;
        int d = rest[var];
        rest[var] = 0;
        view[d] += ParamPoly::monomial(c, rest);
    }
    return view;
}

ParamPoly var_power(int var, int e) {
    Expo4 expo{0, 0, 0, 0};
    expo[var] = e;
    return ParamPoly::monomial(BigRat(1), expo);
}

int degree_in_view(const std::map<int, ParamPoly>& view) {
    return view.empty() ? -1 : view.rbegin()->first;
}

// Pseudo-remainder of a by b with respect to `var` (b nonzero in var).
ParamPoly pseudo_rem(ParamPoly r, const ParamPoly& b, int var) {
    auto bview = univariate_view(b, var);
    int db = degree_in_view(bview);
    ParamPoly lb = bview.rbegin()->second;
    while (!r.is_zero()) {
        auto rview = univariate_view(r, var);
        int dr = degree_in_view(rview);
        if (dr < db) break;
        ParamPoly lr = rview.rbegin()->second;
        r = lb * r - lr * var_power(var, dr - db) * b;
    }
    return r;
}

// gcd of all coefficients in a univariate view (content w.r.t. that var).
ParamPoly view_content(const std::map<int, ParamPoly>& view) {
    ParamPoly g;
    for (const auto& [d, c] : view) g = ParamPoly::gcd(g, c);
    return g;
}

} // namespace

std::string param_name(Param p) { return kParamNames[static_cast<int>(p)]; }

ParamPoly::ParamPoly(const BigRat& c) {
    if (c != 0) terms_[{0, 0, 0, 0}] = c;
}

ParamPoly ParamPoly::variable(Param p, int exp) {
    Expo4 e{0, 0, 0, 0};
    e[static_cast<int>(p)] = exp;
    return monomial(BigRat(1), e);
}

ParamPoly ParamPoly::monomial(const BigRat& c, const Expo4& e) {
    ParamPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Expo4{0, 0, 0, 0} &&
           terms_.begin()->second == 1;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Expo4{0, 0, 0, 0});
}

BigRat ParamPoly::constant_value() const {
    if (terms_.empty()) return BigRat(0);
    if (!is_constant()) throw Error("ParamPoly: not a constant");
    return terms_.begin()->second;
}

int ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expo4& e = terms_.rbegin()->first;
    return e[0] + e[1] + e[2] + e[3];
}

int ParamPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const BigRat& ParamPoly::lead_coeff() const {
    if (terms_.empty()) throw Error("ParamPoly: lead_coeff of zero");
    return terms_.begin()->second;
}

void ParamPoly::add_term(const Expo4& e, const BigRat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    r -= o;
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator*=(const BigRat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

ParamPoly ParamPoly::pow(int e) const {
    if (e < 0) throw Error("ParamPoly: negative power");
    ParamPoly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::optional<ParamPoly> ParamPoly::div_exact(const ParamPoly& o) const {
    if (o.is_zero()) throw Error("ParamPoly: division by zero");
    if (is_zero()) return ParamPoly();
    if (o.is_constant()) {
        ParamPoly r = *this;
        BigRat inv = 1 / o.constant_value();
        r *= inv;
        return r;
    }
    int var = main_variable(*this, o);
    auto bview = univariate_view(o, var);
    int db = degree_in_view(bview);
    const ParamPoly& lb = bview.rbegin()->second;

    ParamPoly rem = *this;
    ParamPoly quot;
    while (!rem.is_zero()) {
        auto rview = univariate_view(rem, var);
        int dr = degree_in_view(rview);
        if (dr < db) return std::nullopt;
        auto qc = rview.rbegin()->second.div_exact(lb);
        if (!qc) return std::nullopt;
        ParamPoly step = *qc * var_power(var, dr - db);
        quot += step;
        rem -= step * o;
    }
    return quot;
}

BigRat ParamPoly::content_signed() const {
    if (is_zero()) return BigRat(1);
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRat content(num_gcd, den_lcm);
    content.canonicalize();
    if (lead_coeff() < 0) content = -content;
    return content;
}

ParamPoly ParamPoly::primitive_part() const {
    if (is_zero()) return *this;
    ParamPoly r = *this;
    r *= 1 / content_signed();
    return r;
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    int var = main_variable(a, b);
    if (var < 0) return ParamPoly(1);
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // One operand is free of the main variable: gcd divides the other's
        // content with respect to it.
        const ParamPoly& flat = a.degree_in(var) == 0 ? a : b;
        const ParamPoly& deep = a.degree_in(var) == 0 ? b : a;
        return gcd(flat, view_content(univariate_view(deep, var)));
    }

    ParamPoly cont_a = view_content(univariate_view(a, var));
    ParamPoly cont_b = view_content(univariate_view(b, var));
    ParamPoly pa = *a.div_exact(cont_a);
    ParamPoly pb = *b.div_exact(cont_b);
    ParamPoly cont_g = gcd(cont_a, cont_b);

    // Primitive PRS; both polynomial and rational content are stripped at
    // every step, otherwise the coefficients of the remainders swell.
    pa = pa.primitive_part();
    pb = pb.primitive_part();
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        ParamPoly r = pseudo_rem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = ParamPoly();
        } else {
            ParamPoly c = view_content(univariate_view(r, var));
            pb = r.div_exact(c)->primitive_part();
        }
    }
    ParamPoly pp = *pa.div_exact(view_content(univariate_view(pa, var)));
    return (cont_g * pp).primitive_part();
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRat mag = c < 0 ? BigRat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (int var = 0; var < kNumParams; ++var) {
            if (e[var] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += kParamNames[var];
            if (e[var] > 1) mono += "^" + std::to_string(e[var]);
        }
        if (mono.empty()) {
            out << rat_string(mag);
        } else if (mag == 1) {
            out << mono;
        } else {
            out << rat_string(mag) << " " << mono;
        }
    }
    return out.str();
}

} // namespace macuv
