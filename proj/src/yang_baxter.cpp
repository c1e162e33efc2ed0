#include "yang_baxter.hpp"

#include <sstream>

namespace macuv {

namespace {

// Entry classification of the rank-r R-matrix at row (a,c), column (b,d).
enum class REntry { Zero, Diag, BPlus, BMinus, CPlus, CMinus };

REntry classify(int a, int c, int b, int d) {
    if (a == b && c == d) {
        if (a == c) return REntry::Diag;
        return a < c ? REntry::BPlus : REntry::BMinus;
    }
    if (a == d && b == c) return a < b ? REntry::CPlus : REntry::CMinus;
    return REntry::Zero;
}

XPoly one_var_poly(std::initializer_list<std::pair<int, RatFunc>> coeffs) {
    XPoly p(1);
    for (const auto& [deg, c] : coeffs) p.add_term({deg}, c);
    return p;
}

// Numerators over the common denominator 1 - t z.
XPoly entry_num_z(REntry e) {
    RatFunc one(1);
    RatFunc t = RatFunc::variable(Param::t);
    switch (e) {
        case REntry::Zero:
            return XPoly(1);
        case REntry::Diag: // (1 - t z)/(1 - t z)
            return one_var_poly({{0, one}, {1, -t}});
        case REntry::BPlus: // (1 - z)
            return one_var_poly({{0, one}, {1, -one}});
        case REntry::BMinus: // t (1 - z)
            return one_var_poly({{0, t}, {1, -t}});
        case REntry::CPlus: // (1 - t)
            return one_var_poly({{0, one - t}});
        case REntry::CMinus: // (1 - t) z
            return one_var_poly({{1, one - t}});
    }
    return XPoly(1);
}

// Homogenized numerators: z -> x/y, multiplied through by y.
XPoly entry_num_xy(REntry e, int nvars, int xvar, int yvar) {
    RatFunc t = RatFunc::variable(Param::t);
    XPoly x = XPoly::variable(nvars, xvar);
    XPoly y = XPoly::variable(nvars, yvar);
    switch (e) {
        case REntry::Zero:
            return XPoly(nvars);
        case REntry::Diag:
            return y - x * t;
        case REntry::BPlus:
            return y - x;
        case REntry::BMinus:
            return (y - x) * t;
        case REntry::CPlus:
            return y * (RatFunc(1) - t);
        case REntry::CMinus:
            return x * (RatFunc(1) - t);
    }
    return XPoly(nvars);
}

} // namespace

RMatrix build_R(int rank) {
    if (rank < 1) throw Error("build_R: rank must be >= 1");
    RMatrix R;
    R.rank = rank;
    int dim = R.dim();
    RatFunc t = RatFunc::variable(Param::t);
    R.den = one_var_poly({{0, RatFunc(1)}, {1, -t}});
    R.num.assign(dim, std::vector<XPoly>(dim, XPoly(1)));
    int w = rank + 1;
    for (int a = 0; a < w; ++a)
        for (int c = 0; c < w; ++c)
            for (int b = 0; b < w; ++b)
                for (int d = 0; d < w; ++d)
                    R.num[a * w + c][b * w + d] = entry_num_z(classify(a, c, b, d));
    return R;
}

RMatrix build_Rcheck(int rank) {
    RMatrix R = build_R(rank);
    RMatrix C = R;
    int w = rank + 1;
    // Rcheck = P R: row (a,c) of Rcheck is row (c,a) of R.
    for (int a = 0; a < w; ++a)
        for (int c = 0; c < w; ++c) C.num[a * w + c] = R.num[c * w + a];
    return C;
}

std::vector<std::vector<XPoly>> build_Rcheck_homog(int rank, int nvars, int xvar, int yvar) {
    int w = rank + 1;
    int dim = w * w;
    std::vector<std::vector<XPoly>> M(dim, std::vector<XPoly>(dim, XPoly(nvars)));
    for (int a = 0; a < w; ++a)
        for (int c = 0; c < w; ++c)
            for (int b = 0; b < w; ++b)
                for (int d = 0; d < w; ++d)
                    M[a * w + c][b * w + d] =
                        entry_num_xy(classify(c, a, b, d), nvars, xvar, yvar);
    return M;
}

LMatrix build_L(int rank, int copy, int nvars, int xvar) {
    if (rank < 1) throw Error("build_L: rank must be >= 1");
    LMatrix L;
    L.rank = rank;
    L.copy = copy;
    int w = rank + 1;
    XPoly one = XPoly::one(nvars);
    XPoly x = XPoly::variable(nvars, xvar);
    XPoly u = XPoly::constant(nvars, RatFunc::variable(Param::u));
    XPoly v = XPoly::constant(nvars, RatFunc::variable(Param::v));

    auto k_range = [&](int from) { // k_{from} ... k_r on this copy
        std::map<ModeKey, ModeWord> words;
        for (int l = from; l <= rank; ++l) words[{l, copy}] = {BosonGen::k()};
        return words;
    };

    L.entries.assign(w, std::vector<OpSum>(w, OpSum::zero(nvars)));
    // (0,0): 1 - u x k_1...k_r
    L.entries[0][0] = OpSum::scalar(one) + OpSum::word(-(u * x), k_range(1));
    for (int j = 1; j <= rank; ++j) {
        // (0,j): (1 - u v k_1...k_r) phi_j
        std::map<ModeKey, ModeWord> plain{{ModeKey{j, copy}, {BosonGen::phi()}}};
        auto weighted = k_range(1);
        weighted[{j, copy}].push_back(BosonGen::phi());
        L.entries[0][j] = OpSum::word(one, plain) + OpSum::word(-(u * v), weighted);
    }
    for (int i = 1; i <= rank; ++i) {
        // (i,0): x (k_{i+1}...k_r) phid_i
        auto words = k_range(i + 1);
        words[{i, copy}] = {BosonGen::phi_dag()};
        L.entries[i][0] = OpSum::word(x, words);
    }
    for (int i = 1; i <= rank; ++i) {
        for (int j = 1; j <= rank; ++j) {
            if (i == j) {
                // (i,i): (x - v k_i) k_{i+1}...k_r
                auto tail = k_range(i + 1);
                auto with_ki = tail;
                with_ki[{i, copy}] = {BosonGen::k()};
                L.entries[i][i] = OpSum::word(x, tail) + OpSum::word(-v, with_ki);
            } else {
                // (i,j), i != j: [x or v] (k_{i+1}...k_r) phid_i phi_j
                auto words = k_range(i + 1);
                words[{i, copy}] = {BosonGen::phi_dag()};
                words[{j, copy}].push_back(BosonGen::phi());
                L.entries[i][j] = OpSum::word(i > j ? x : v, words);
            }
        }
    }
    return L;
}

LMatrix simplify_L(const LMatrix& L) {
    LMatrix S = L;
    for (auto& row : S.entries) {
        for (auto& entry : row) {
            OpSum kept(entry.nvars());
            for (const auto& term : entry.terms()) {
                OpTerm cleaned;
                cleaned.scalar = term.scalar;
                bool dead = false;
                for (const auto& [mode, word] : term.words) {
                    if (mode.family < mode.copy) {
                        for (const auto& g : word) {
                            if (g.kind != BosonGen::Kind::KPow) dead = true;
                        }
                        continue; // k -> 1
                    }
                    cleaned.words.emplace(mode, word);
                }
                if (!dead) kept += OpSum::word(cleaned.scalar, cleaned.words);
            }
            entry = kept;
        }
    }
    return S;
}

std::vector<std::vector<OpSum>> build_monodromy(int rank, int nvars, int xvar) {
    int w = rank + 1;
    std::vector<std::vector<OpSum>> T;
    for (int copy = 1; copy <= rank; ++copy) {
        LMatrix L = build_L(rank, copy, nvars, xvar);
        if (copy == 1) {
            T = L.entries;
            continue;
        }
        std::vector<std::vector<OpSum>> next(w, std::vector<OpSum>(w, OpSum::zero(nvars)));
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j)
                for (int s = 0; s < w; ++s) next[i][j] += T[i][s] * L.entries[s][j];
        T = std::move(next);
    }
    return T;
}

std::vector<OpSum> extract_zf(const std::vector<std::vector<OpSum>>& monodromy) {
    std::vector<OpSum> column;
    for (const auto& row : monodromy) column.push_back(row[0]);
    return column;
}

Report check_column_sums(int rank) {
    Report report;
    RMatrix R = build_R(rank);
    for (int col = 0; col < R.dim(); ++col) {
        XPoly sum(1);
        for (int row = 0; row < R.dim(); ++row) sum += R.num[row][col];
        report.record(sum == R.den, "rank " + std::to_string(rank) + " column " +
                                        std::to_string(col) + " sums to 1");
    }
    return report;
}

namespace {

std::vector<std::vector<OpSum>> tensor_LL(const LMatrix& A, const LMatrix& B) {
    int w = A.rank + 1;
    int dim = w * w;
    std::vector<std::vector<OpSum>> M(dim, std::vector<OpSum>(dim, OpSum::zero(2)));
    for (int e = 0; e < w; ++e)
        for (int f = 0; f < w; ++f)
            for (int b = 0; b < w; ++b)
                for (int d = 0; d < w; ++d)
                    M[e * w + f][b * w + d] = A.entries[e][b] * B.entries[f][d];
    return M;
}

std::vector<std::vector<OpSum>> mul_scalar_op(const std::vector<std::vector<XPoly>>& S,
                                              const std::vector<std::vector<OpSum>>& M) {
    size_t dim = S.size();
    std::vector<std::vector<OpSum>> R(dim, std::vector<OpSum>(dim, OpSum::zero(2)));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                if (S[i][k].is_zero()) continue;
                R[i][j] += M[k][j] * S[i][k];
            }
    return R;
}

std::vector<std::vector<OpSum>> mul_op_scalar(const std::vector<std::vector<OpSum>>& M,
                                              const std::vector<std::vector<XPoly>>& S) {
    size_t dim = S.size();
    std::vector<std::vector<OpSum>> R(dim, std::vector<OpSum>(dim, OpSum::zero(2)));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                if (S[k][j].is_zero()) continue;
                R[i][j] += M[i][k] * S[k][j];
            }
    return R;
}

} // namespace

Report check_rll(int rank, int cutoff) {
    if (cutoff < 2) throw Error("check_rll: cutoff too small");
    Report report;
    LMatrix Lx = build_L(rank, 1, 2, 1);
    LMatrix Ly = build_L(rank, 1, 2, 2);
    auto Rh = build_Rcheck_homog(rank, 2, 1, 2);
    auto lhs = mul_scalar_op(Rh, tensor_LL(Lx, Ly));
    auto rhs = mul_op_scalar(tensor_LL(Ly, Lx), Rh);

    std::vector<ModeKey> modes;
    for (int f = 1; f <= rank; ++f) modes.push_back({f, 1});
    ModeSpace space(modes, cutoff, FockNorm::Standard);
    auto states = space.states_up_to(cutoff - 2);

    int dim = (rank + 1) * (rank + 1);
    bool all_ok = true;
    std::string witness;
    for (int i = 0; i < dim && all_ok; ++i) {
        for (int j = 0; j < dim && all_ok; ++j) {
            OpSum diff = lhs[i][j] - rhs[i][j];
            if (diff.is_zero()) continue;
            for (const auto& state : states) {
                if (!space.apply(diff, state).empty()) {
                    all_ok = false;
                    witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        }
    }
    report.record(all_ok, "RLL identity rank " + std::to_string(rank) + " cutoff " +
                              std::to_string(cutoff) +
                              (all_ok ? "" : " witness " + witness));
    return report;
}

Report check_zf(int rank, int cutoff) {
    if (cutoff < 2) throw Error("check_zf: cutoff too small");
    Report report;
    auto Ax = extract_zf(build_monodromy(rank, 2, 1));
    auto Ay = extract_zf(build_monodromy(rank, 2, 2));
    auto Rh = build_Rcheck_homog(rank, 2, 1, 2);
    RatFunc t = RatFunc::variable(Param::t);
    XPoly y_minus_tx = XPoly::variable(2, 2) - XPoly::variable(2, 1) * t;

    std::vector<ModeKey> modes;
    for (int f = 1; f <= rank; ++f)
        for (int c = 1; c <= rank; ++c) modes.push_back({f, c});
    ModeSpace space(modes, cutoff, FockNorm::Standard);
    auto states = space.states_up_to(cutoff - 2);

    int w = rank + 1;
    bool all_ok = true;
    std::string witness;
    for (int a = 0; a < w && all_ok; ++a) {
        for (int c = 0; c < w && all_ok; ++c) {
            OpSum lhs = OpSum::zero(2);
            for (int b = 0; b < w; ++b)
                for (int d = 0; d < w; ++d) {
                    const XPoly& s = Rh[a * w + c][b * w + d];
                    if (s.is_zero()) continue;
                    lhs += (Ax[b] * Ay[d]) * s;
                }
            OpSum diff = lhs - (Ay[a] * Ax[c]) * y_minus_tx;
            if (diff.is_zero()) continue;
            for (const auto& state : states) {
                if (!space.apply(diff, state).empty()) {
                    all_ok = false;
                    witness = "component (" + std::to_string(a) + "," + std::to_string(c) + ")";
                    break;
                }
            }
        }
    }
    report.record(all_ok, "ZF identity rank " + std::to_string(rank) + " cutoff " +
                              std::to_string(cutoff) +
                              (all_ok ? "" : " witness " + witness));
    return report;
}

namespace {

// Sum of all |m_1..m_r> with |m| = M.
ModeSpace::Vector summed_state(const ModeSpace& space, int M, int nvars) {
    ModeSpace::Vector v;
    std::vector<int> occ(space.modes().size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (pos + 1 == occ.size()) {
            occ[pos] = left;
            v[occ] = XPoly::one(nvars);
            return;
        }
        for (int m = 0; m <= left; ++m) {
            occ[pos] = m;
            rec(pos + 1, left - m);
        }
    };
    if (M >= 0) rec(0, M);
    return v;
}

ModeSpace::Vector scale_vector(ModeSpace::Vector v, const XPoly& s) {
    for (auto& [state, weight] : v) weight = weight * s;
    for (auto it = v.begin(); it != v.end();) {
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    }
    return v;
}

} // namespace

Report check_amazing(int rank, int m_max) {
    Report report;
    LMatrix L = build_L(rank, 1, 1, 1);
    std::vector<ModeKey> modes;
    for (int f = 1; f <= rank; ++f) modes.push_back({f, 1});
    ModeSpace space(modes, m_max + 2, FockNorm::Rescaled);

    XPoly x = XPoly::variable(1, 1);
    RatFunc u = RatFunc::variable(Param::u);
    RatFunc v = RatFunc::variable(Param::v);

    for (int M = 0; M <= m_max; ++M) {
        auto ketM = summed_state(space, M, 1);
        std::string at = " at rank " + std::to_string(rank) + " M " + std::to_string(M);

        XPoly c00 = XPoly::one(1) - x * (u * RatFunc(monomial_qtuv(0, M)));
        report.record(space.apply(L.entries[0][0], ketM) == scale_vector(ketM, c00),
                      "L00 |M> = (1 - x u t^M) |M>" + at);

        for (int j = 1; j <= rank; ++j) {
            auto got = space.apply(L.entries[0][j], ketM);
            ModeSpace::Vector want;
            if (M > 0) {
                XPoly c0j =
                    XPoly::constant(1, RatFunc(1) - u * v * RatFunc(monomial_qtuv(0, M - 1)));
                want = scale_vector(summed_state(space, M - 1, 1), c0j);
            }
            report.record(got == want,
                          "L0j |M> = (1 - u v t^{M-1}) |M-1> j=" + std::to_string(j) + at);
        }

        OpSum creation_sum = OpSum::zero(1);
        for (int i = 1; i <= rank; ++i) creation_sum += L.entries[i][0];
        XPoly c_new = x * (RatFunc(1) - RatFunc(monomial_qtuv(0, M + 1)));
        report.record(space.apply(creation_sum, ketM) ==
                          scale_vector(summed_state(space, M + 1, 1), c_new),
                      "sum_i Li0 |M> = x (1 - t^{M+1}) |M+1>" + at);

        for (int j = 1; j <= rank; ++j) {
            OpSum through_sum = OpSum::zero(1);
            for (int i = 1; i <= rank; ++i) through_sum += L.entries[i][j];
            XPoly c_th = x - XPoly::constant(1, v * RatFunc(monomial_qtuv(0, M)));
            report.record(space.apply(through_sum, ketM) == scale_vector(ketM, c_th),
                          "sum_i Lij |M> = (x - v t^M) |M> j=" + std::to_string(j) + at);
        }
    }
    return report;
}

} // namespace macuv
