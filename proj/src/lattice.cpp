#include "lattice.hpp"

#include "opword.hpp"
#include "yang_baxter.hpp"

#include <json.hpp>

#include <functional>
#include <numeric>
#include <sstream>

namespace macuv {

XPoly uncolored_weight(int m, int h_in, int h_out, int n, int x_var) {
    XPoly x = XPoly::variable(n, x_var);
    RatFunc u = RatFunc::variable(Param::u);
    RatFunc v = RatFunc::variable(Param::v);
    auto t_pow = [](int e) { return RatFunc(monomial_qtuv(0, e)); };
    if (h_in == 0 && h_out == 0) return XPoly::one(n) - x * (u * t_pow(m));
    if (h_in == 0 && h_out == 1) {
        if (m < 1) throw Error("uncolored_weight: annihilation on empty edge");
        return XPoly::constant(n, RatFunc(1) - u * v * t_pow(m - 1));
    }
    if (h_in == 1 && h_out == 0) return x * (RatFunc(1) - t_pow(m + 1));
    if (h_in == 1 && h_out == 1) return x - XPoly::constant(n, v * t_pow(m));
    throw Error("uncolored_weight: bad horizontal flags");
}

XPoly colored_weight(const std::vector<int>& bottom, int color_in, int color_out, int n,
                     int x_var, std::vector<int>* top) {
    int r = static_cast<int>(bottom.size());
    if (color_in < 0 || color_in > r || color_out < 0 || color_out > r)
        throw Error("colored_weight: color out of range");
    LMatrix L = build_L(r, 1, n, x_var);
    int cutoff = *std::max_element(bottom.begin(), bottom.end()) + 2;
    std::vector<ModeKey> modes;
    for (int f = 1; f <= r; ++f) modes.push_back({f, 1});
    ModeSpace space(modes, cutoff, FockNorm::Rescaled);
    auto out = space.apply(L.entries[color_in][color_out], bottom);
    if (out.empty()) throw Error("colored_weight: invalid vertex");
    if (out.size() != 1) throw Error("colored_weight: entry not occupation-homogeneous");
    if (top) *top = out.begin()->first;
    return out.begin()->second;
}

namespace {

std::vector<int> multiplicities(const Partition& lambda) {
    std::vector<int> m(lambda.rank(), 0);
    for (int i = 1; i <= lambda.rank(); ++i) m[i - 1] = multiplicity(lambda.parts(), i);
    return m;
}

} // namespace

std::vector<UncoloredConfig> enumerate_uncolored(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n)
        throw Error("enumerate_uncolored: more paths than rows");
    int cols = lambda.rank();
    std::vector<UncoloredConfig> result;
    if (cols == 0) {
        UncoloredConfig empty;
        empty.n = n;
        empty.cols = 0;
        empty.vert.assign(n + 1, {});
        empty.horiz.assign(n, std::vector<int>(1, 0));
        empty.weight = XPoly::one(n);
        result.push_back(std::move(empty));
        return result;
    }
    std::vector<int> target = multiplicities(lambda);
    int want_total = std::accumulate(target.begin(), target.end(), 0);

    UncoloredConfig cur;
    cur.n = n;
    cur.cols = cols;
    cur.vert.assign(n + 1, std::vector<int>(cols, 0));
    cur.horiz.assign(n, std::vector<int>(cols + 1, 0));

    // Per-vertex weights are collected along the search and only expanded
    // into a polynomial once a configuration survives the top boundary.
    std::vector<XPoly> factors;
    // Row k (bottom = 0) carries variable x_{n-k}.
    std::function<void(int)> do_row = [&](int row) {
        if (row == n) {
            if (cur.vert[n] != target) return;
            XPoly w = XPoly::one(n);
            for (const auto& f : factors) w = w * f;
            cur.weight = w;
            result.push_back(cur);
            return;
        }
        int x_var = n - row;
        int have = std::accumulate(cur.vert[row].begin(), cur.vert[row].end(), 0);
        if (have > want_total || want_total - have > n - row) return;

        std::function<void(int, int)> do_col = [&](int col, int h) {
            if (col == cols) {
                if (h != 0) return;
                cur.horiz[row][cols] = 0;
                do_row(row + 1);
                return;
            }
            int m = cur.vert[row][col];
            for (int h_out = 0; h_out <= 1; ++h_out) {
                int m_top = m + h - h_out;
                if (m_top < 0) continue;
                cur.vert[row + 1][col] = m_top;
                cur.horiz[row][col + 1] = h_out;
                factors.push_back(uncolored_weight(m, h, h_out, n, x_var));
                do_col(col + 1, h_out);
                factors.pop_back();
            }
        };
        for (int left = 0; left <= 1; ++left) {
            cur.horiz[row][0] = left;
            do_col(0, left);
        }
    };
    do_row(0);
    return result;
}

std::vector<ColoredConfig> enumerate_colored(const Partition& lambda, int n) {
    if (lambda.nonzero_length() > n) throw Error("enumerate_colored: more paths than rows");
    int cols = lambda.rank();
    int r = cols;
    std::vector<ColoredConfig> result;
    if (cols == 0) {
        ColoredConfig empty;
        empty.n = n;
        empty.cols = 0;
        empty.vert.assign(n + 1, {});
        empty.horiz.assign(n, std::vector<int>(1, 0));
        empty.weight = XPoly::one(n);
        result.push_back(std::move(empty));
        return result;
    }
    std::vector<int> target_mult = multiplicities(lambda);

    // Per-row vertex tables generated from the L-matrix, memoized per
    // (bottom occupancies, in colour, out colour).
    std::vector<LMatrix> row_L;
    for (int row = 0; row < n; ++row) row_L.push_back(build_L(r, 1, n, n - row));
    std::vector<ModeKey> modes;
    for (int f = 1; f <= r; ++f) modes.push_back({f, 1});
    ModeSpace space(modes, n + 2, FockNorm::Rescaled);
    using VertexKey = std::tuple<std::vector<int>, int, int>;
    std::vector<std::map<VertexKey, std::pair<std::vector<int>, XPoly>>> table(n);
    auto vertex = [&](int row, const std::vector<int>& bottom, int g, int g_out)
        -> const std::pair<std::vector<int>, XPoly>* {
        VertexKey key{bottom, g, g_out};
        auto it = table[row].find(key);
        if (it == table[row].end()) {
            auto res = space.apply(row_L[row].entries[g][g_out], bottom);
            std::pair<std::vector<int>, XPoly> value;
            if (res.empty()) {
                value.second = XPoly(n); // invalid transition
            } else {
                value = *res.begin();
            }
            it = table[row].emplace(key, std::move(value)).first;
        }
        return it->second.second.is_zero() ? nullptr : &it->second;
    };

    ColoredConfig cur;
    cur.n = n;
    cur.cols = cols;
    cur.vert.assign(n + 1, std::vector<std::vector<int>>(cols, std::vector<int>(r, 0)));
    cur.horiz.assign(n, std::vector<int>(cols + 1, 0));

    auto color_totals = [&](int row) {
        std::vector<int> tot(r, 0);
        for (int col = 0; col < cols; ++col)
            for (int c = 0; c < r; ++c) tot[c] += cur.vert[row][col][c];
        return tot;
    };

    std::vector<const XPoly*> factors;
    std::function<void(int)> do_row = [&](int row) {
        if (row == n) {
            for (int col = 0; col < cols; ++col)
                for (int c = 0; c < r; ++c)
                    if (cur.vert[n][col][c] != (c == col ? target_mult[col] : 0)) return;
            XPoly w = XPoly::one(n);
            for (const XPoly* f : factors) w = w * *f;
            cur.weight = w;
            result.push_back(cur);
            return;
        }
        auto totals = color_totals(row);
        int deficit = 0;
        for (int c = 0; c < r; ++c) {
            if (totals[c] > target_mult[c]) return;
            deficit += target_mult[c] - totals[c];
        }
        if (deficit > n - row) return;

        std::function<void(int, int)> do_col = [&](int col, int g) {
            if (col == cols) {
                if (g != 0) return;
                cur.horiz[row][cols] = 0;
                do_row(row + 1);
                return;
            }
            const std::vector<int>& m = cur.vert[row][col];
            for (int g_out = 0; g_out <= r; ++g_out) {
                if (g == 0 && g_out > 0 && m[g_out - 1] < 1) continue;
                if (g > 0 && g_out > 0 && g != g_out && m[g_out - 1] < 1) continue;
                const auto* step = vertex(row, m, g, g_out);
                if (!step) continue;
                // paths only move up or right, so colour c can never sit in a
                // column past its terminal column c
                bool reachable = true;
                for (int c = 0; c < r; ++c)
                    if (step->first[c] > 0 && col > c) reachable = false;
                if (!reachable) continue;
                cur.vert[row + 1][col] = step->first;
                cur.horiz[row][col + 1] = g_out;
                factors.push_back(&step->second);
                do_col(col + 1, g_out);
                factors.pop_back();
            }
        };
        for (int left = 0; left <= r; ++left) {
            cur.horiz[row][0] = left;
            do_col(0, left);
        }
    };
    do_row(0);
    return result;
}

UncoloredConfig project_bw(const ColoredConfig& c) {
    UncoloredConfig p;
    p.n = c.n;
    p.cols = c.cols;
    p.vert.assign(c.n + 1, std::vector<int>(c.cols, 0));
    for (int lvl = 0; lvl <= c.n; ++lvl)
        for (int col = 0; col < c.cols; ++col)
            p.vert[lvl][col] =
                std::accumulate(c.vert[lvl][col].begin(), c.vert[lvl][col].end(), 0);
    p.horiz.assign(c.n, std::vector<int>(c.cols + 1, 0));
    for (int row = 0; row < c.n; ++row)
        for (int col = 0; col <= c.cols; ++col)
            p.horiz[row][col] = c.horiz[row][col] > 0 ? 1 : 0;
    p.weight = XPoly(c.n); // projection carries no weight of its own
    return p;
}

RatFunc boundary_factor(const Partition& lambda) {
    RatFunc g(1);
    for (int i = 1; i <= lambda.rank(); ++i) {
        int mult = multiplicity(lambda.parts(), i);
        for (int l = 1; l <= mult; ++l) g *= one_minus_monomial(0, l);
    }
    return g;
}

XPoly partition_function_F(const Partition& lambda, int n) {
    XPoly sum(n);
    for (const auto& config : enumerate_uncolored(lambda, n)) sum += config.weight;
    return sum * (RatFunc(1) / boundary_factor(lambda));
}

XPoly partition_function_P(const Partition& lambda, int n) {
    XPoly sum(n);
    for (const auto& config : enumerate_colored(lambda, n)) sum += config.weight;
    return sum * (RatFunc(1) / boundary_factor(lambda));
}

std::string config_key(const UncoloredConfig& c) {
    std::ostringstream out;
    for (const auto& level : c.vert) {
        for (int m : level) out << m << ",";
        out << ";";
    }
    out << "|";
    for (const auto& row : c.horiz) {
        for (int h : row) out << h << ",";
        out << ";";
    }
    return out.str();
}

Report check_color_independence(const Partition& lambda, int n) {
    Report report;
    std::map<std::string, XPoly> uncolored;
    for (const auto& config : enumerate_uncolored(lambda, n))
        uncolored.emplace(config_key(config), config.weight);
    std::map<std::string, XPoly> colored_sums;
    std::map<std::string, int> colored_counts;
    for (const auto& config : enumerate_colored(lambda, n)) {
        std::string key = config_key(project_bw(config));
        auto [it, inserted] = colored_sums.try_emplace(key, config.weight);
        if (!inserted) it->second += config.weight;
        ++colored_counts[key];
    }
    if (uncolored.size() != colored_sums.size()) {
        report.record(false, "profile sets differ between colored and uncolored models");
        return report;
    }
    int idx = 0;
    for (const auto& [key, weight] : uncolored) {
        auto it = colored_sums.find(key);
        bool match = it != colored_sums.end() && it->second == weight;
        report.record(match, "profile " + std::to_string(idx++) + " (" +
                                 std::to_string(it == colored_sums.end()
                                                    ? 0
                                                    : colored_counts[key]) +
                                 " colorings) for lambda=" + lambda.to_string() +
                                 " n=" + std::to_string(n));
    }
    return report;
}

namespace {

nlohmann::json config_json(const UncoloredConfig& c) {
    nlohmann::json doc;
    doc["vertical"] = c.vert;
    doc["horizontal"] = c.horiz;
    doc["weight"] = c.weight.to_text();
    return doc;
}

nlohmann::json config_json(const ColoredConfig& c) {
    nlohmann::json doc;
    doc["vertical"] = c.vert;
    doc["horizontal"] = c.horiz;
    doc["weight"] = c.weight.to_text();
    return doc;
}

} // namespace

std::string render_configs_json(const Partition& lambda, int n, bool colored,
                                bool group_by_profile) {
    nlohmann::json doc;
    doc["lambda"] = lambda.parts();
    doc["n"] = n;
    doc["colored"] = colored;
    if (!colored) {
        doc["configurations"] = nlohmann::json::array();
        for (const auto& config : enumerate_uncolored(lambda, n))
            doc["configurations"].push_back(config_json(config));
        doc["partition_function"] = partition_function_F(lambda, n).to_text();
    } else if (group_by_profile) {
        std::map<std::string, nlohmann::json> groups;
        std::map<std::string, XPoly> sums;
        for (const auto& config : enumerate_colored(lambda, n)) {
            auto profile = project_bw(config);
            std::string key = config_key(profile);
            if (!groups.count(key)) {
                groups[key]["profile"] = config_json(profile);
                groups[key]["colorings"] = nlohmann::json::array();
                sums.emplace(key, XPoly(n));
            }
            groups[key]["colorings"].push_back(config_json(config));
            sums[key] += config.weight;
        }
        doc["profiles"] = nlohmann::json::array();
        for (auto& [key, group] : groups) {
            group["weight_sum"] = sums[key].to_text();
            doc["profiles"].push_back(group);
        }
        doc["partition_function"] = partition_function_P(lambda, n).to_text();
    } else {
        doc["configurations"] = nlohmann::json::array();
        for (const auto& config : enumerate_colored(lambda, n))
            doc["configurations"].push_back(config_json(config));
        doc["partition_function"] = partition_function_P(lambda, n).to_text();
    }
    return doc.dump(2);
}

std::string render_configs_text(const Partition& lambda, int n, bool colored) {
    std::ostringstream out;
    if (!colored) {
        auto configs = enumerate_uncolored(lambda, n);
        out << configs.size() << " configurations\n";
        for (const auto& config : configs) out << config.weight.to_text() << "\n";
        out << "partition function: " << partition_function_F(lambda, n).to_text() << "\n";
    } else {
        auto configs = enumerate_colored(lambda, n);
        out << configs.size() << " configurations\n";
        for (const auto& config : configs) out << config.weight.to_text() << "\n";
        out << "partition function: " << partition_function_P(lambda, n).to_text() << "\n";
    }
    return out.str();
}

} // namespace macuv
