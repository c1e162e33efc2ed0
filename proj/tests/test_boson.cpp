#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boson.hpp"
#include "hecke.hpp"

using namespace macuv;

namespace {
RatFunc t_pow(int e) { return RatFunc(monomial_qtuv(0, e)); }
RatFunc q_pow(int e) { return RatFunc(monomial_qtuv(e, 0)); }
} // namespace

TEST_CASE("truncated matrices") {
    auto phi = truncated_matrix(BosonGen::phi(), 2);
    CHECK(phi[1][2] == RatFunc(1) - t_pow(2)); // phi|2> = (1-t^2)|1>
    CHECK(phi[0][1] == RatFunc(1) - t_pow(1));
    for (int m = 0; m <= 2; ++m) CHECK(phi[m][0].is_zero()); // phi|0> = 0

    auto k = truncated_matrix(BosonGen::k(), 2);
    CHECK(k[0][0] == RatFunc(1));
    CHECK(k[1][1] == t_pow(1));
    CHECK(k[2][2] == t_pow(2));

    auto phid = truncated_matrix(BosonGen::phi_dag(), 2);
    CHECK(phid[1][0] == RatFunc(1));
    CHECK(phid[2][1] == RatFunc(1));
    // phid|N> dropped by truncation
    for (int m = 0; m <= 2; ++m) CHECK(phid[m][2].is_zero());

    // rescaled normalization: phid carries (1-t^{m+1}), phi is plain
    auto phid_r = truncated_matrix(BosonGen::phi_dag(), 2, FockNorm::Rescaled);
    CHECK(phid_r[1][0] == RatFunc(1) - t_pow(1));
    auto phi_r = truncated_matrix(BosonGen::phi(), 2, FockNorm::Rescaled);
    CHECK(phi_r[0][1] == RatFunc(1));
}

TEST_CASE("t-boson relations hold in both normalizations on the safe subspace") {
    CHECK(check_tboson_relations(3).ok);
    CHECK(check_tboson_relations(2).ok);
    // the rescaled representation satisfies the same relations
    for (auto norm : {FockNorm::Standard, FockNorm::Rescaled}) {
        int N = 3;
        auto phi = truncated_matrix(BosonGen::phi(), N, norm);
        auto phid = truncated_matrix(BosonGen::phi_dag(), N, norm);
        RatFunc t = RatFunc::variable(Param::t);
        auto lhs = mat_sub(mat_mul(phi, phid), mat_mul(phid, phi));
        // phi phid - t phid phi - (1-t) = t phid phi - t phid phi checked columnwise
        for (int m = 0; m < N; ++m) {
            RatFunc expect = (RatFunc(1) - t);
            CHECK(mat_mul(phi, phid)[m][m] - t * mat_mul(phid, phi)[m][m] == expect);
        }
    }
}

TEST_CASE("braket") {
    // <1| phid |0> = 1
    CHECK(braket({RatFunc(1), {BosonGen::phi_dag()}}, 1, 0, 2) == RatFunc(1));
    // <0| phi phid |0> = 1 - t
    CHECK(braket({RatFunc(1), {BosonGen::phi(), BosonGen::phi_dag()}}, 0, 0, 2) ==
          RatFunc(1) - t_pow(1));
    // <2| phid |0> = 0
    CHECK(braket({RatFunc(1), {BosonGen::phi_dag()}}, 2, 0, 3).is_zero());
    // cutoff too small is an explicit error
    CHECK_THROWS_AS(braket({RatFunc(1), {BosonGen::phi_dag(), BosonGen::phi_dag()}}, 2, 1, 2),
                    Error);
    // independence of the cutoff once it clears the bound
    BosonWord w{RatFunc(1),
                {BosonGen::k(), BosonGen::phi_dag(), BosonGen::phi(), BosonGen::phi_dag()}};
    CHECK(braket(w, 1, 0, 2) == braket(w, 1, 0, 5));
}

TEST_CASE("trace engine basics") {
    // start d=0, apply k then the twist weight k^alpha == k_power(0,1):
    // coefficient z w, closing to 1/(1-q t)
    TraceCell cell = TraceCell::start();
    cell = trace_apply(cell, BosonGen::k_power(0, 1)); // rightmost factor first
    cell = trace_apply(cell, BosonGen::k());
    REQUIRE(cell.coeff.size() == 1);
    CHECK(cell.coeff.count({1, 1}) == 1);
    CHECK(trace_close(cell) == RatFunc(1) / one_minus_monomial(1, 1));

    // k^{2+alpha}: coefficient z^2 w -> 1/(1-q t^2)
    TraceCell cell2 = TraceCell::start();
    cell2 = trace_apply(cell2, BosonGen::k_power(0, 1));
    cell2 = trace_apply(cell2, BosonGen::k());
    cell2 = trace_apply(cell2, BosonGen::k());
    CHECK(trace_close(cell2) == RatFunc(1) / one_minus_monomial(1, 2));

    // phid then phi: coefficient (1 - t z), offset back to 0
    TraceCell cell3 = TraceCell::start();
    cell3 = trace_apply(cell3, BosonGen::phi_dag());
    CHECK(cell3.offset == 1);
    cell3 = trace_apply(cell3, BosonGen::phi());
    CHECK(cell3.offset == 0);
    CHECK(cell3.coeff.at({0, 0}) == RatFunc(1));
    CHECK(cell3.coeff.at({1, 0}) == -t_pow(1));

    // empty coefficient closes to zero
    TraceCell dead = TraceCell::start();
    dead = trace_apply(dead, BosonGen::phi()); // annihilates, offset -1
    CHECK(trace_close(dead).is_zero());

    // surviving (0,0) monomial means the twist was omitted
    CHECK_THROWS_AS(trace_close(TraceCell::start()), Error);
}

TEST_CASE("trace of k^j twist reproduces geometric series") {
    for (int j = 0; j <= 4; ++j) {
        TraceCell cell = TraceCell::start();
        cell = trace_apply(cell, BosonGen::k_power(0, 1));
        for (int rep = 0; rep < j; ++rep) cell = trace_apply(cell, BosonGen::k());
        CHECK(trace_close(cell) == RatFunc(1) / one_minus_monomial(1, j));
    }
}

TEST_CASE("symbolic trace agrees with the truncated series oracle") {
    // words with balanced phi/phid counts, traced with the twist q^m; the
    // truncated sum over m = 0..M agrees with the exact trace through q^M.
    const int M = 6;
    std::vector<std::vector<BosonGen>> words = {
        {BosonGen::phi(), BosonGen::phi_dag()},
        {BosonGen::phi_dag(), BosonGen::phi()},
        {BosonGen::k(), BosonGen::phi(), BosonGen::phi_dag(), BosonGen::k()},
        {BosonGen::phi(), BosonGen::k(), BosonGen::phi_dag()},
        {BosonGen::phi(), BosonGen::phi(), BosonGen::phi_dag(), BosonGen::phi_dag()},
    };
    for (const auto& gens : words) {
        // exact symbolic trace of word * k^alpha
        TraceCell cell = TraceCell::start();
        cell = trace_apply(cell, BosonGen::k_power(0, 1));
        for (auto it = gens.rbegin(); it != gens.rend(); ++it) cell = trace_apply(cell, *it);
        RatFunc exact = trace_close(cell);

        // truncated numerical trace sum_m <m| word |m> q^m
        RatFunc truncated;
        for (int m = 0; m <= M; ++m) {
            BosonWord w{q_pow(m), gens};
            truncated += braket(w, m, m, M + 3);
        }

        // compare power series in q up to order M: clear denominators and
        // check that the difference is divisible by q^{M+1}
        RatFunc diff = exact - truncated;
        ParamPoly num = diff.num();
        bool high_order = true;
        for (const auto& [e, c] : num.terms()) high_order = high_order && e[0] >= M + 1;
        CHECK(high_order);
    }
}
