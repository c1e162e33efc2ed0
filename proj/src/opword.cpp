#include "opword.hpp"

#include <algorithm>
#include <sstream>

namespace macuv {

OpSum OpSum::scalar(const XPoly& s) {
    OpSum r(s.nvars());
    if (!s.is_zero()) r.terms_.push_back(OpTerm{s, {}});
    return r;
}

OpSum OpSum::word(const XPoly& s, const std::map<ModeKey, ModeWord>& w) {
    OpSum r(s.nvars());
    if (!s.is_zero()) r.terms_.push_back(OpTerm{s, w});
    return r;
}

void OpSum::push(OpTerm term) {
    if (term.scalar.is_zero()) return;
    for (auto& existing : terms_) {
        if (existing.words == term.words) {
            existing.scalar += term.scalar;
            if (existing.scalar.is_zero()) {
                existing = std::move(terms_.back());
                terms_.pop_back();
            }
            return;
        }
    }
    terms_.push_back(std::move(term));
}

OpSum OpSum::operator+(const OpSum& o) const {
    OpSum r = *this;
    for (const auto& term : o.terms_) r.push(term);
    return r;
}

OpSum OpSum::operator-(const OpSum& o) const {
    OpSum r = *this;
    for (auto term : o.terms_) {
        term.scalar = -term.scalar;
        r.push(std::move(term));
    }
    return r;
}

OpSum OpSum::operator*(const OpSum& o) const {
    OpSum r(nvars_);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            OpTerm prod;
            prod.scalar = a.scalar * b.scalar;
            prod.words = a.words;
            for (const auto& [mode, word] : b.words) {
                auto& dest = prod.words[mode];
                dest.insert(dest.end(), word.begin(), word.end());
            }
            r.push(std::move(prod));
        }
    }
    return r;
}

OpSum OpSum::operator*(const XPoly& s) const {
    OpSum r(nvars_);
    for (auto term : terms_) {
        term.scalar = term.scalar * s;
        r.push(std::move(term));
    }
    return r;
}

std::string gen_to_string(const BosonGen& g, int family) {
    std::string tag = std::to_string(family);
    switch (g.kind) {
        case BosonGen::Kind::Phi:
            return "phi" + tag;
        case BosonGen::Kind::PhiDag:
            return "phid" + tag;
        case BosonGen::Kind::KPow:
            if (g.tpow == 1 && g.qpow == 0) return "k" + tag;
            return "k" + tag + "^(" + std::to_string(g.tpow) + "," + std::to_string(g.qpow) + ")";
    }
    return "?";
}

std::string OpSum::to_string() const {
    if (terms_.empty()) return "0";
    // Deterministic ordering for rendering.
    std::vector<std::string> rendered;
    for (const auto& term : terms_) {
        std::ostringstream out;
        out << "(" << term.scalar.to_text() << ")";
        for (const auto& [mode, word] : term.words) {
            for (const auto& g : word) {
                out << " " << gen_to_string(g, mode.family);
                if (mode.copy != 1) out << "^(" << mode.copy << ")";
            }
        }
        rendered.push_back(out.str());
    }
    std::sort(rendered.begin(), rendered.end());
    std::string joined;
    for (const auto& piece : rendered) {
        if (!joined.empty()) joined += " + ";
        joined += piece;
    }
    return joined;
}

ModeSpace::ModeSpace(std::vector<ModeKey> modes, int cutoff, FockNorm norm)
    : modes_(std::move(modes)), cutoff_(cutoff), norm_(norm) {
    std::sort(modes_.begin(), modes_.end());
}

std::vector<ModeSpace::State> ModeSpace::states_up_to(int max_occ) const {
    std::vector<State> out;
    State cur(modes_.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t pos = 0;
        while (pos < cur.size() && cur[pos] == max_occ) cur[pos++] = 0;
        if (pos == cur.size()) break;
        ++cur[pos];
    }
    return out;
}

bool ModeSpace::apply_term(const OpTerm& term, const State& in, State& out,
                           RatFunc& coeff) const {
    out = in;
    coeff = RatFunc(1);
    for (const auto& [mode, word] : term.words) {
        auto it = std::lower_bound(modes_.begin(), modes_.end(), mode);
        if (it == modes_.end() || *it != mode) throw Error("ModeSpace: unknown mode");
        size_t idx = static_cast<size_t>(it - modes_.begin());
        int occ = out[idx];
        for (auto g = word.rbegin(); g != word.rend(); ++g) {
            int next = 0;
            RatFunc c = fock_step(*g, occ, norm_, next);
            if (c.is_zero()) return false;
            coeff *= c;
            occ = next;
            if (occ > cutoff_) throw Error("ModeSpace: cutoff exceeded (state not truncation-safe)");
        }
        out[idx] = occ;
    }
    return true;
}

ModeSpace::Vector ModeSpace::apply(const OpSum& op, const Vector& v) const {
    Vector result;
    for (const auto& [state, weight] : v) {
        for (const auto& term : op.terms()) {
            State out;
            RatFunc coeff;
            if (!apply_term(term, state, out, coeff)) continue;
            XPoly contrib = term.scalar * coeff * weight;
            auto [it, inserted] = result.try_emplace(out, contrib);
            if (!inserted) it->second += contrib;
        }
    }
    for (auto it = result.begin(); it != result.end();) {
        it = it->second.is_zero() ? result.erase(it) : std::next(it);
    }
    return result;
}

ModeSpace::Vector ModeSpace::apply(const OpSum& op, const State& basis_state) const {
    Vector v;
    v[basis_state] = XPoly::one(op.nvars());
    return apply(op, v);
}

bool vectors_equal(const ModeSpace::Vector& a, const ModeSpace::Vector& b) {
    return a == b;
}

} // namespace macuv
