#pragma once

#include "boson.hpp"
#include "xpoly.hpp"

#include <map>
#include <vector>

namespace macuv {

// Addresses one boson family within one L-matrix copy. Under the linear form
// the mode's role is decided by the comparison: traced when family > copy,
// vacuum-sandwiched when family < copy, diagonal when equal.
struct ModeKey {
    int family = 1;
    int copy = 1;
    auto operator<=>(const ModeKey&) const = default;
};

enum class ModeRole { Traced, Vacuum, Diagonal };

inline ModeRole mode_role(const ModeKey& m) {
    if (m.family > m.copy) return ModeRole::Traced;
    if (m.family < m.copy) return ModeRole::Vacuum;
    return ModeRole::Diagonal;
}

using ModeWord = std::vector<BosonGen>; // left-to-right operator order

// One monomial of an operator expression: a polynomial scalar in the spectral
// variables times a word per touched mode. Generators of distinct modes
// commute; per mode the stored order is the operator order.
struct OpTerm {
    XPoly scalar;
    std::map<ModeKey, ModeWord> words;
};

class OpSum {
public:
    OpSum() : nvars_(0) {}
    explicit OpSum(int nvars) : nvars_(nvars) {}

    static OpSum zero(int nvars) { return OpSum(nvars); }
    static OpSum scalar(const XPoly& s);
    static OpSum word(const XPoly& s, const std::map<ModeKey, ModeWord>& w);

    int nvars() const { return nvars_; }
    const std::vector<OpTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    OpSum operator+(const OpSum& o) const;
    OpSum operator-(const OpSum& o) const;
    OpSum operator*(const OpSum& o) const; // operator product, this on the left
    OpSum operator*(const XPoly& s) const;
    OpSum& operator+=(const OpSum& o) { return *this = *this + o; }

    std::string to_string() const;

private:
    void push(OpTerm term); // merges identical word maps
    int nvars_;
    std::vector<OpTerm> terms_;
};

// Basis states and truncated application over a fixed set of modes.
class ModeSpace {
public:
    ModeSpace(std::vector<ModeKey> modes, int cutoff, FockNorm norm);

    using State = std::vector<int>; // occupation per mode, parallel to modes()

    const std::vector<ModeKey>& modes() const { return modes_; }
    int cutoff() const { return cutoff_; }

    // All states with every occupation <= max_occ.
    std::vector<State> states_up_to(int max_occ) const;

    // Weighted sum of basis states; XPoly scalars in the spectral variables.
    using Vector = std::map<State, XPoly>;

    // Applies one term to a basis state. Returns false when annihilation kills
    // the state; throws if a creation would leave the truncated space.
    bool apply_term(const OpTerm& term, const State& in, State& out, RatFunc& coeff) const;

    Vector apply(const OpSum& op, const Vector& v) const;
    Vector apply(const OpSum& op, const State& basis_state) const;

private:
    std::vector<ModeKey> modes_;
    int cutoff_;
    FockNorm norm_;
};

bool vectors_equal(const ModeSpace::Vector& a, const ModeSpace::Vector& b);

std::string gen_to_string(const BosonGen& g, int family);

} // namespace macuv
