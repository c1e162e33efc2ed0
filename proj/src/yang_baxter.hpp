#pragma once

#include "hecke.hpp"
#include "opword.hpp"

namespace macuv {

// Stochastic rank-r R-matrix. Every entry is a rational function of a single
// formal spectral variable z with the common denominator 1 - t z; only the
// numerators are stored. Row/column index (a,b) is encoded as a*(r+1)+b.
struct RMatrix {
    int rank = 1;
    std::vector<std::vector<XPoly>> num; // (r+1)^2 square, one-variable z polys
    XPoly den;                           // 1 - t z

    int dim() const { return (rank + 1) * (rank + 1); }
};

RMatrix build_R(int rank);
RMatrix build_Rcheck(int rank); // P * R

// Homogenized Rcheck in two spectral variables: y (1 - t x/y) Rcheck(x/y),
// a polynomial matrix in (x, y). Used to clear the denominator in RLL/ZF.
std::vector<std::vector<XPoly>> build_Rcheck_homog(int rank, int nvars, int xvar, int yvar);

// L-matrix of rank r acting on boson families 1..r of the given copy; entries
// are operator sums whose scalars are polynomials in x_{xvar} of an nvars ring.
struct LMatrix {
    int rank = 1;
    int copy = 1;
    std::vector<std::vector<OpSum>> entries;
};

LMatrix build_L(int rank, int copy, int nvars = 1, int xvar = 1);

// Drops generators on modes with family < copy (phi/phid kill the word, k
// maps to 1); sound inside the linear form by the vacuum-counting lemma.
LMatrix simplify_L(const LMatrix& L);

// T(x) = L^{(1)}(x) ... L^{(r)}(x); entries act across copies 1..r.
std::vector<std::vector<OpSum>> build_monodromy(int rank, int nvars = 1, int xvar = 1);
std::vector<OpSum> extract_zf(const std::vector<std::vector<OpSum>>& monodromy);

// Columns of R(z) each sum to 1 (i.e. numerator columns sum to the common
// denominator).
Report check_column_sums(int rank);

// Rcheck(x/y) [L(x) (x) L(y)] = [L(y) (x) L(x)] Rcheck(x/y) as operator-valued
// matrices, asserted on states with every occupation <= cutoff - 2.
Report check_rll(int rank, int cutoff);

// Rcheck(x/y) [A(x) (x) A(y)] = [A(y) (x) A(x)] for the ZF vector.
Report check_zf(int rank, int cutoff);

// The four summed-state relations of the rank-r L-matrix, in the rescaled
// Fock normalization, for all 0 <= M <= m_max.
Report check_amazing(int rank, int m_max);

} // namespace macuv
