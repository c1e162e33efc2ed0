#pragma once

#include "ratfunc.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace macuv {

// Generator of one t-boson family. KPow(a,b) acts diagonally as t^{am} q^{bm}
// on |m>; k itself is KPow(1,0). The q-weight realizes twist insertions
// k^{c*alpha} with t^alpha identified with q, so alpha never appears.
struct BosonGen {
    enum class Kind { Phi, PhiDag, KPow };
    Kind kind = Kind::KPow;
    int tpow = 1;
    int qpow = 0;

    static BosonGen phi() { return {Kind::Phi, 0, 0}; }
    static BosonGen phi_dag() { return {Kind::PhiDag, 0, 0}; }
    static BosonGen k() { return {Kind::KPow, 1, 0}; }
    static BosonGen k_power(int a, int b) { return {Kind::KPow, a, b}; }

    auto operator<=>(const BosonGen&) const = default;
};

// Two valid Fock representations of the same relations (4.1-style):
// Standard:  phi|m> = (1-t^m)|m-1>,  phid|m> = |m+1>
// Rescaled:  phi|m> = |m-1>,         phid|m> = (1-t^{m+1})|m+1>
// The matrix-product linear form uses Standard; the lattice vertex tables and
// the summed-state relations use Rescaled.
enum class FockNorm { Standard, Rescaled };

// Coefficient a single generator contributes when acting on |m>; sets out_m.
// Returns zero RatFunc for annihilation of the vacuum.
RatFunc fock_step(const BosonGen& g, int m, FockNorm norm, int& out_m);

using RatMatrix = std::vector<std::vector<RatFunc>>;

RatMatrix truncated_matrix(const BosonGen& g, int cutoff, FockNorm norm = FockNorm::Standard);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_identity(int dim);

struct Report;

// phi k = t k phi, t phid k = k phid, phi phid - t phid phi = 1 - t, verified
// on the truncation-safe columns |0>..|N-1>.
Report check_tboson_relations(int cutoff);

// A word in one boson family with a scalar prefactor; generators are stored
// left to right, so application to a ket starts from the back.
struct BosonWord {
    RatFunc scalar = RatFunc(1);
    std::vector<BosonGen> gens;
};

// <m_out| word |m_in> by truncated-matrix action. Errors if the cutoff cannot
// accommodate every intermediate state.
RatFunc braket(const BosonWord& word, int m_out, int m_in, int cutoff,
               FockNorm norm = FockNorm::Standard);

// Symbolic trace state over one family: the current occupation is m + offset
// with m symbolic, and the accumulated coefficient is a polynomial in
// z (= t^m) and w (= q^m).
struct TraceCell {
    int offset = 0;
    std::map<std::pair<int, int>, RatFunc> coeff; // (z-degree, w-degree) -> scalar

    static TraceCell start() { return TraceCell{0, {{{0, 0}, RatFunc(1)}}}; }
};

TraceCell trace_apply(const TraceCell& cell, const BosonGen& g);

// Sum over m >= 0: each monomial c z^a w^b contributes c / (1 - t^a q^b).
// Nonzero offset means no diagonal contribution (returns 0); a surviving
// (0,0)-monomial means the twist was omitted and the trace diverges.
RatFunc trace_close(const TraceCell& cell);

} // namespace macuv
