#include "xpoly.hpp"

#include <json.hpp>

#include <sstream>

namespace macuv {

XPoly XPoly::constant(int nvars, const RatFunc& c) {
    XPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

XPoly XPoly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw Error("XPoly: variable index out of range");
    std::vector<int> e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, e, RatFunc(1));
}

XPoly XPoly::monomial(int nvars, const std::vector<int>& expo, const RatFunc& c) {
    if (static_cast<int>(expo.size()) != nvars) throw Error("XPoly: exponent size mismatch");
    XPoly p(nvars);
    p.add_term(expo, c);
    return p;
}

int XPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

RatFunc XPoly::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? RatFunc() : it->second;
}

void XPoly::add_term(const std::vector<int>& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void XPoly::check_compat(const XPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("XPoly: mixed variable counts");
}

XPoly XPoly::operator-() const {
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r = *this;
    r += o;
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    XPoly r = *this;
    r -= o;
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    check_compat(o);
    XPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

XPoly XPoly::operator*(const RatFunc& c) const {
    XPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.add_term(e, coef * c);
    return r;
}

XPoly& XPoly::operator*=(const RatFunc& c) { return *this = *this * c; }

bool XPoly::operator==(const XPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

XPoly XPoly::pow(int e) const {
    if (e < 0) throw Error("XPoly: negative power");
    XPoly r = one(nvars_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

XPoly XPoly::swap_x(int i, int j) const {
    if (i < 1 || i > nvars_ || j < 1 || j > nvars_) throw Error("XPoly: index out of range");
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f = e;
        std::swap(f[i - 1], f[j - 1]);
        r.add_term(f, c);
    }
    return r;
}

XPoly XPoly::substitute_x(int i, const XPoly& value) const {
    if (i < 1 || i > nvars_) throw Error("XPoly: index out of range");
    check_compat(value);
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> rest = e;
        int d = rest[i - 1];
        rest[i - 1] = 0;
        r += monomial(nvars_, rest, c) * value.pow(d);
    }
    return r;
}

XPoly XPoly::apply_permutation(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw Error("XPoly: bad permutation");
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f(nvars_);
        for (int k = 0; k < nvars_; ++k) f[perm[k] - 1] = e[k];
        r.add_term(f, c);
    }
    return r;
}

XPoly XPoly::substitute_params(const ParamBindings& bindings) const {
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute_params(bindings));
    return r;
}

bool XPoly::is_symmetric() const {
    for (int i = 1; i < nvars_; ++i) {
        if (!symmetric_in(i, i + 1)) return false;
    }
    return true;
}

std::optional<XPoly> XPoly::div_exact_linear(int i, int j) const {
    // Synthetic division by (x_i - x_j), viewing the polynomial as univariate
    // in x_i: with p = sum c_d x_i^d, the quotient satisfies
    // q_{d-1} = c_d + x_j q_d going down from the top degree.
    if (is_zero()) return XPoly(nvars_);
    std::map<int, XPoly> by_deg;
    int top = 0;
    for (const auto& [e, c] : terms_) {
        std::vector<int> rest = e;
        int d = rest[i - 1];
        rest[i - 1] = 0;
        top = std::max(top, d);
        auto [it, inserted] = by_deg.try_emplace(d, nvars_);
        it->second.add_term(rest, c);
    }
    XPoly xj = variable(nvars_, j);
    XPoly carry(nvars_);
    std::map<int, XPoly> quot;
    for (int d = top; d >= 1; --d) {
        auto it = by_deg.find(d);
        XPoly qd = it == by_deg.end() ? carry : it->second + carry;
        quot.emplace(d - 1, qd);
        carry = qd * xj;
    }
    XPoly rem = carry;
    if (auto it = by_deg.find(0); it != by_deg.end()) rem += it->second;
    if (!rem.is_zero()) return std::nullopt;
    XPoly result(nvars_);
    for (const auto& [d, coef] : quot) {
        std::vector<int> e(nvars_, 0);
        e[i - 1] = d;
        result += coef * monomial(nvars_, e, RatFunc(1));
    }
    return result;
}

std::optional<XPoly> XPoly::div_exact(const XPoly& o) const {
    check_compat(o);
    if (o.is_zero()) throw Error("XPoly: division by zero");
    XPoly rem = *this;
    XPoly quot(nvars_);
    const auto& lead = *o.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        std::vector<int> e(nvars_);
        for (int k = 0; k < nvars_; ++k) {
            e[k] = rlead.first[k] - lead.first[k];
            if (e[k] < 0) return std::nullopt;
        }
        XPoly step = monomial(nvars_, e, rlead.second / lead.second);
        quot += step;
        rem -= step * o;
    }
    return quot;
}

std::string XPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            out << c.to_string();
        } else if (c.is_one()) {
            out << mono;
        } else {
            out << c.to_string() << " * " << mono;
        }
    }
    return out.str();
}

std::string XPoly::to_json() const {
    nlohmann::json doc;
    doc["nvars"] = nvars_;
    doc["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json term;
        term["xexp"] = e;
        term["num"] = c.num().to_string();
        term["den"] = c.den().to_string();
        doc["terms"].push_back(term);
    }
    return doc.dump(2);
}

} // namespace macuv
