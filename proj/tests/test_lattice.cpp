#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattice.hpp"
#include "mpa.hpp"
#include "special.hpp"

#include <numeric>

using namespace macuv;

namespace {

RatFunc u() { return RatFunc::variable(Param::u); }
RatFunc v() { return RatFunc::variable(Param::v); }
RatFunc t_pow(int e) { return RatFunc(monomial_qtuv(0, e)); }

XPoly xv(int n, int i) { return XPoly::variable(n, i); }
XPoly c4(const RatFunc& r) { return XPoly::constant(4, r); }

} // namespace

TEST_CASE("uncolored vertex weights match the table") {
    int n = 2;
    XPoly x = xv(n, 1);
    CHECK(uncolored_weight(2, 0, 0, n, 1) == XPoly::one(n) - x * (u() * t_pow(2)));
    CHECK(uncolored_weight(0, 0, 0, n, 1) == XPoly::one(n) - x * u());
    CHECK(uncolored_weight(1, 0, 1, n, 1) == XPoly::constant(n, RatFunc(1) - u() * v()));
    CHECK(uncolored_weight(1, 1, 0, n, 1) == x * (RatFunc(1) - t_pow(2)));
    CHECK(uncolored_weight(2, 1, 1, n, 1) == x - XPoly::constant(n, v() * t_pow(2)));
    CHECK_THROWS_AS(uncolored_weight(0, 0, 1, n, 1), Error);
}

TEST_CASE("colored vertex weights generated from the L-matrix match the table") {
    int n = 1;
    XPoly x = xv(n, 1);
    // pass-through, bottom {1,2}: 1 - x u t^3
    CHECK(colored_weight({1, 2}, 0, 0, n, 1) == XPoly::one(n) - x * (u() * t_pow(3)));
    // colour-1 annihilation from {1,2}: 1 - u v t^2
    CHECK(colored_weight({1, 2}, 0, 1, n, 1) ==
          XPoly::constant(n, RatFunc(1) - u() * v() * t_pow(2)));
    // colour-1 creation into {1,2}: x (1-t^2) t^{m_2} = x (1-t^2) t^2
    CHECK(colored_weight({1, 2}, 1, 0, n, 1) == x * ((RatFunc(1) - t_pow(2)) * t_pow(2)));
    // colour-1 through {1,2}: (x - v t^{m_1}) t^{|m|_1} = (x - v t) t^2
    CHECK(colored_weight({1, 2}, 1, 1, n, 1) ==
          (x - XPoly::constant(n, v() * t_pow(1))) * t_pow(2));
    // left colour 2 in, right colour 1 out, bottom {1,2}: x (1-t^{m_2+1}) t^{|m|_2}
    CHECK(colored_weight({1, 2}, 2, 1, n, 1) == x * (RatFunc(1) - t_pow(3)));
    // left colour 1 in, right colour 2 out, bottom {1,2}: v (1-t^{m_1+1}) t^{|m|_1 - 1}
    CHECK(colored_weight({1, 2}, 1, 2, n, 1) ==
          XPoly::constant(n, v() * (RatFunc(1) - t_pow(2)) * t_pow(1)));
    // the empty row case
    CHECK(colored_weight({0, 0}, 0, 0, n, 1) == XPoly::one(n) - x * u());
}

TEST_CASE("vertex-level colour sum reproduces the uncolored weight") {
    // Sum colored weights over the left-edge colour (bottom determined by
    // conservation), fixed top coloring and right edge: uncolored weight.
    int n = 1;
    for (int r = 2; r <= 3; ++r) {
        std::vector<std::vector<int>> tops;
        if (r == 2)
            tops = {{0, 0}, {1, 0}, {1, 2}, {2, 1}, {0, 3}};
        else
            tops = {{0, 0, 0}, {1, 0, 1}, {0, 2, 1}};
        for (const auto& top : tops) {
            int top_total = std::accumulate(top.begin(), top.end(), 0);
            // creation case: left occupied, right empty; bottom total = top-1
            if (top_total >= 1) {
                XPoly sum(n);
                for (int g = 1; g <= r; ++g) {
                    std::vector<int> bottom = top;
                    bottom[g - 1] -= 1;
                    if (bottom[g - 1] < 0) continue;
                    sum += colored_weight(bottom, g, 0, n, 1);
                }
                CHECK(sum == uncolored_weight(top_total - 1, 1, 0, n, 1));
            }
            // through case: left occupied, right any fixed colour g'
            for (int gp = 1; gp <= r; ++gp) {
                if (top[gp - 1] < 1) continue;
                XPoly sum(n);
                for (int g = 1; g <= r; ++g) {
                    std::vector<int> bottom = top;
                    bottom[g - 1] -= 1;
                    bottom[gp - 1] += 1;
                    if (bottom[g - 1] < 0) continue;
                    sum += colored_weight(bottom, g, gp, n, 1);
                }
                CHECK(sum == uncolored_weight(top_total, 1, 1, n, 1));
            }
            // annihilation case: left empty, right fixed colour g'
            for (int gp = 1; gp <= r; ++gp) {
                std::vector<int> bottom = top;
                bottom[gp - 1] += 1;
                CHECK(colored_weight(bottom, 0, gp, n, 1) ==
                      uncolored_weight(top_total + 1, 0, 1, n, 1));
            }
            // pass-through case
            CHECK(colored_weight(top, 0, 0, n, 1) ==
                  uncolored_weight(top_total, 0, 0, n, 1));
        }
    }
}

TEST_CASE("single-path lattice") {
    auto configs = enumerate_uncolored(Partition({1}), 1);
    REQUIRE(configs.size() == 1);
    // table weight x(1-t); normalized partition function x1
    CHECK(configs[0].weight == xv(1, 1) * (RatFunc(1) - t_pow(1)));
    CHECK(partition_function_F(Partition({1}), 1) == xv(1, 1));
    CHECK(partition_function_P(Partition({1}), 1) == xv(1, 1));
}

TEST_CASE("empty partition lattice") {
    auto configs = enumerate_uncolored(Partition(std::vector<int>{}), 1);
    REQUIRE(configs.size() == 1);
    CHECK(configs[0].weight == XPoly::one(1));
    CHECK(partition_function_F(Partition(std::vector<int>{}), 1) == XPoly::one(1));
}

TEST_CASE("partition functions agree with the matrix-product routes") {
    for (int n = 1; n <= 3; ++n) {
        for (int w = 1; w <= 4; ++w) {
            for (const auto& lambda : partitions_of(w, n, 3)) {
                if (lambda.nonzero_length() > n) continue;
                CHECK(partition_function_F(lambda, n) == bp_matrix_product(lambda, n));
            }
        }
    }
    // colored side against eval_P at q=0, spot checks
    ParamBindings q0{{Param::q, RatFunc()}};
    CHECK(partition_function_P(Partition({2, 1}), 2) ==
          eval_P(Partition({2, 1}), 2).substitute_params(q0));
    CHECK(partition_function_P(Partition({1, 1}), 2) ==
          eval_P(Partition({1, 1}), 2).substitute_params(q0));
}

TEST_CASE("black-and-white projection") {
    auto colored = enumerate_colored(Partition({2, 1}), 2);
    auto uncolored = enumerate_uncolored(Partition({2, 1}), 2);
    std::map<std::string, int> keys;
    for (const auto& c : colored) ++keys[config_key(project_bw(c))];
    std::map<std::string, int> base;
    for (const auto& p : uncolored) ++base[config_key(p)];
    for (const auto& [key, count] : keys) CHECK(base.count(key) == 1);
    // every uncolored profile is hit by at least one coloring
    CHECK(keys.size() == base.size());
}

TEST_CASE("colour independence per profile") {
    CHECK(check_color_independence(Partition({1}), 1).ok);
    CHECK(check_color_independence(Partition({2, 1}), 2).ok);
    CHECK(check_color_independence(Partition({2, 2}), 2).ok);
    CHECK(check_color_independence(Partition({3, 1}), 3).ok);
}

TEST_CASE("showcase profile for lambda=(4,3,3,1), n=4") {
    Partition lambda({4, 3, 3, 1});
    int n = 4;
    XPoly x1 = xv(n, 1), x2 = xv(n, 2), x3 = xv(n, 3), x4 = xv(n, 4);
    RatFunc one(1);

    // the displayed profile, rows bottom (x4) to top (x1)
    std::vector<std::vector<int>> vert = {
        {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 2, 0}, {1, 0, 2, 1}};
    std::vector<std::vector<int>> horiz = {
        {1, 1, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 1, 1, 1, 0}};

    // transcribed row products; the displays omit the three empty vertices
    // (1 - x_a u) at column 4 of rows x2, x3, x4
    XPoly row1 = (x1 - c4(v() * t_pow(1))) * (x1 - c4(v())) * (x1 - c4(v() * t_pow(2))) *
                 (x1 * (one - t_pow(1)));
    XPoly row2 = (x2 * (one - t_pow(1))) * c4(one - u() * v()) * (x2 * (one - t_pow(2))) *
                 (XPoly::one(n) - x2 * u());
    XPoly row3 = (x3 - c4(v())) * (x3 * (one - t_pow(1))) *
                 (XPoly::one(n) - x3 * (u() * t_pow(1))) * (XPoly::one(n) - x3 * u());
    XPoly row4 = (x4 - c4(v())) * (x4 - c4(v())) * (x4 * (one - t_pow(1))) *
                 (XPoly::one(n) - x4 * u());
    XPoly w_profile = row1 * row2 * row3 * row4;

    // locate the profile among the enumerated configurations
    auto configs = enumerate_uncolored(lambda, n);
    const UncoloredConfig* found = nullptr;
    for (const auto& config : configs) {
        if (config.vert == vert && config.horiz == horiz) found = &config;
    }
    REQUIRE(found != nullptr);
    CHECK(found->weight == w_profile);

    // exactly six colored configurations project onto it
    std::vector<XPoly> matching;
    for (const auto& config : enumerate_colored(lambda, n)) {
        auto projected = project_bw(config);
        if (projected.vert == vert && projected.horiz == horiz)
            matching.push_back(config.weight);
    }
    REQUIRE(matching.size() == 6);

    XPoly shared34 = row3 * row4;
    auto colored_row2 = [&](const XPoly& col3) {
        return (x2 * (one - t_pow(1))) * c4(one - u() * v()) * col3 *
               (XPoly::one(n) - x2 * u());
    };
    std::vector<XPoly> transcribed = {
        // v(1-t)(x1-v)v(1-t^2)x1(1-t) | x2(1-t)(1-uv)x2(1-t)t
        c4(v() * (one - t_pow(1))) * (x1 - c4(v())) * c4(v() * (one - t_pow(2))) *
            (x1 * (one - t_pow(1))) * colored_row2(x2 * ((one - t_pow(1)) * t_pow(1))) *
            shared34,
        // same row1 | x2(1-t)(1-uv)x2(1-t)
        c4(v() * (one - t_pow(1))) * (x1 - c4(v())) * c4(v() * (one - t_pow(2))) *
            (x1 * (one - t_pow(1))) * colored_row2(x2 * (one - t_pow(1))) * shared34,
        // v(1-t)(x1-v)(x1-v)x1(1-t) | x2(1-t)(1-uv)x2(1-t^2)
        c4(v() * (one - t_pow(1))) * (x1 - c4(v())) * (x1 - c4(v())) *
            (x1 * (one - t_pow(1))) * colored_row2(x2 * (one - t_pow(2))) * shared34,
        // (x1-v)(x1-v)v(1-t^2)x1(1-t) | x2(1-t)(1-uv)x2(1-t)t
        (x1 - c4(v())) * (x1 - c4(v())) * c4(v() * (one - t_pow(2))) *
            (x1 * (one - t_pow(1))) * colored_row2(x2 * ((one - t_pow(1)) * t_pow(1))) *
            shared34,
        // (x1-v)(x1-v)v(1-t^2)x1(1-t) | x2(1-t)(1-uv)x2(1-t)
        (x1 - c4(v())) * (x1 - c4(v())) * c4(v() * (one - t_pow(2))) *
            (x1 * (one - t_pow(1))) * colored_row2(x2 * (one - t_pow(1))) * shared34,
        // (x1-v)(x1-v)(x1-v)x1(1-t) | x2(1-t)(1-uv)x2(1-t^2)
        (x1 - c4(v())) * (x1 - c4(v())) * (x1 - c4(v())) * (x1 * (one - t_pow(1))) *
            colored_row2(x2 * (one - t_pow(2))) * shared34,
    };
    for (const auto& expected : transcribed) {
        int hits = 0;
        for (const auto& got : matching)
            if (got == expected) ++hits;
        CHECK(hits == 1);
    }

    // summing the six colored weights recovers the uncolored profile weight
    XPoly total(n);
    for (const auto& got : matching) total += got;
    CHECK(total == w_profile);
}

TEST_CASE("renderers produce output") {
    std::string json = render_configs_json(Partition({1}), 1, true, true);
    CHECK(json.find("partition_function") != std::string::npos);
    std::string text = render_configs_text(Partition({1}), 1, false);
    CHECK(text.find("configurations") != std::string::npos);
}
