#pragma once

#include "shapes.hpp"
#include "xpoly.hpp"
#include "hecke.hpp"

namespace macuv {

// Path configurations on an n x lambda_1 grid. Rows are stored bottom to top;
// the bottom row carries x_n and the top row x_1. vert[k] holds the vertical
// edge occupancies below row k (vert[0] = bottom boundary, all zero;
// vert[n] = top boundary, the part multiplicities of lambda).
struct UncoloredConfig {
    int n = 0;
    int cols = 0;
    std::vector<std::vector<int>> vert;      // (n+1) x cols
    std::vector<std::vector<int>> horiz;     // n x (cols+1), 0/1, [row][col] edge entering col
    XPoly weight;
};

// Colored version: vertical edges carry per-color occupancies, horizontal
// edges one color (0 = empty, 1..r).
struct ColoredConfig {
    int n = 0;
    int cols = 0;
    std::vector<std::vector<std::vector<int>>> vert; // (n+1) x cols x r
    std::vector<std::vector<int>> horiz;             // n x (cols+1), color ids
    XPoly weight;
};

// Boltzmann weight of a single uncolored vertex: bottom occupancy m, left/right
// horizontal flags, using the row variable x_var of an n-variable ring.
// Invalid transitions (annihilating an empty edge) throw.
XPoly uncolored_weight(int m, int h_in, int h_out, int n, int x_var);

// Colored vertex weight generated from the rank-r L-matrix entries in the
// rescaled Fock normalization; bottom occupancies per color, horizontal
// colors in/out (0 = empty). Returns the weight and the top occupancies.
XPoly colored_weight(const std::vector<int>& bottom, int color_in, int color_out, int n,
                     int x_var, std::vector<int>* top = nullptr);

std::vector<UncoloredConfig> enumerate_uncolored(const Partition& lambda, int n);
std::vector<ColoredConfig> enumerate_colored(const Partition& lambda, int n);

UncoloredConfig project_bw(const ColoredConfig& c);

// The vertex tables are expressed in the rescaled Fock basis; the resulting
// column telescoping contributes prod_{i>=1} prod_{l=1}^{m_i} (1 - t^l)
// relative to the monodromy expectation values.
RatFunc boundary_factor(const Partition& lambda);

// Normalized partition functions, directly comparable with bp_matrix_product
// and with eval_P at q=0 respectively.
XPoly partition_function_F(const Partition& lambda, int n);
XPoly partition_function_P(const Partition& lambda, int n);

// Per-profile identity: the uncolored weight of each profile equals the sum
// of colored weights projecting onto it.
Report check_color_independence(const Partition& lambda, int n);

std::string config_key(const UncoloredConfig& c); // profile grouping key

std::string render_configs_json(const Partition& lambda, int n, bool colored,
                                bool group_by_profile);
std::string render_configs_text(const Partition& lambda, int n, bool colored);

} // namespace macuv
