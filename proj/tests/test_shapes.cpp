#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shapes.hpp"

using namespace macuv;

namespace {
// Independent column-counting oracle for the conjugate.
std::vector<int> conjugate_by_columns(const std::vector<int>& parts) {
    int r = parts.empty() ? 0 : parts[0];
    std::vector<int> cols;
    for (int i = 1; i <= r; ++i) {
        int count = 0;
        for (int p : parts)
            if (p >= i) ++count;
        cols.push_back(count);
    }
    return cols;
}
} // namespace

TEST_CASE("sort_to_partition") {
    CHECK(sort_to_partition({2, 1}).parts() == std::vector<int>{2, 1});
    CHECK(sort_to_partition({1, 2}).parts() == std::vector<int>{2, 1});
    CHECK(sort_to_partition({0, 3, 0, 3}).parts() == std::vector<int>{3, 3, 0, 0});
}

TEST_CASE("orbit enumeration") {
    auto o21 = orbit(Partition({2, 1}), 2);
    CHECK(o21.size() == 2);
    CHECK(o21[0] == Composition{1, 2}); // lexicographic order
    CHECK(o21[1] == Composition{2, 1});
    CHECK(orbit(Partition({1, 1}), 2).size() == 1);
    // (4,3,3,1): 4!/2! = 12 rearrangements
    CHECK(orbit(Partition({4, 3, 3, 1}), 4).size() == 12);
}

TEST_CASE("orbit size matches the multinomial count") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(4, n, 4)) {
            if (lambda.nonzero_length() > n) continue;
            // n! / prod_i m_i! with m_0 counting zeros
            long expect = 1;
            for (int k = 2; k <= n; ++k) expect *= k;
            std::vector<int> padded = lambda.parts();
            padded.resize(n, 0);
            for (int val = 0; val <= lambda.rank(); ++val) {
                int m = multiplicity(padded, val);
                for (int k = 2; k <= m; ++k) expect /= k;
            }
            CHECK(static_cast<long>(orbit(lambda, n).size()) == expect);
        }
    }
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity({2, 1}, 1) == 1);
    CHECK(multiplicity({2, 1}, 2) == 1);
    CHECK(multiplicity({1, 1}, 3) == 0);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({2, 1})).parts() == std::vector<int>{2, 1});
    CHECK(conjugate(Partition({2})).parts() == std::vector<int>{1, 1});
    CHECK(conjugate(Partition({4, 3, 3, 1})).parts() == conjugate_by_columns({4, 3, 3, 1}));
    // involution, and lambda'_i - lambda'_{i+1} = m_i(lambda)
    for (const auto& lambda : partitions_of(5, 4, 4)) {
        CHECK(conjugate(conjugate(lambda)) == lambda);
        auto conj = conjugate(lambda).parts();
        conj.push_back(0);
        for (int i = 1; i <= lambda.rank(); ++i)
            CHECK(conj[i - 1] - conj[i] == multiplicity(lambda.parts(), i));
    }
}

TEST_CASE("omega") {
    CHECK(omega(Partition({2, 1})) == one_minus_monomial(1, 1));
    CHECK(omega(Partition({1, 1})) == RatFunc(1));
    // direct evaluation of the product with lambda' = (4,3,3,1)
    RatFunc expect = one_minus_monomial(1, 1) * one_minus_monomial(2, 1) *
                     one_minus_monomial(3, 3) * one_minus_monomial(1, 0) *
                     one_minus_monomial(2, 2) * one_minus_monomial(1, 2);
    CHECK(omega(Partition({4, 3, 3, 1})) == expect);
}

TEST_CASE("composition parsing") {
    CHECK(parse_composition("4,3,3,1") == Composition{4, 3, 3, 1});
    CHECK(parse_composition("") == Composition{});
    CHECK_THROWS_AS(parse_composition("2,x"), Error);
    CHECK_THROWS_AS(parse_composition("2,-1"), Error);
}
