#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratfunc.hpp"
#include "xpoly.hpp"

#include <random>

using namespace macuv;

namespace {

RatFunc q() { return RatFunc::variable(Param::q); }
RatFunc t() { return RatFunc::variable(Param::t); }
RatFunc u() { return RatFunc::variable(Param::u); }
RatFunc v() { return RatFunc::variable(Param::v); }

// Independent long-division oracle for univariate-in-one-parameter quotients:
// checks q * b + r == a with deg(r) < deg(b) by construction of the caller.
bool divides_back(const RatFunc& quotient, const RatFunc& divisor, const RatFunc& value) {
    return quotient * divisor == value;
}

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    ParamPoly num;
    for (int k = 0; k < 3; ++k) {
        Expo4 e{expo(rng), expo(rng), 0, 0};
        num += ParamPoly::monomial(BigRat(coef(rng)), e);
    }
    ParamPoly den;
    for (int k = 0; k < 2; ++k) {
        Expo4 e{expo(rng), expo(rng), 0, 0};
        den += ParamPoly::monomial(BigRat(coef(rng)), e);
    }
    if (den.is_zero()) den = ParamPoly(1);
    return RatFunc(num, den);
}

} // namespace

TEST_CASE("field arithmetic examples") {
    RatFunc one_minus_q = RatFunc(1) - q();
    RatFunc one_minus_qt = one_minus_monomial(1, 1);

    // (1-q)/(1-qt) * (1-qt) = 1-q
    CHECK((one_minus_q / one_minus_qt) * one_minus_qt == one_minus_q);
    // 1/(1-qt) + 1/(1-qt) = 2/(1-qt)
    RatFunc inv = RatFunc(1) / one_minus_qt;
    CHECK(inv + inv == RatFunc(2) / one_minus_qt);
    // (1-q^2 t^2)/(1-qt) = 1+qt, frozen from the division oracle
    RatFunc ratio = one_minus_monomial(2, 2) / one_minus_qt;
    RatFunc expected = RatFunc(1) + RatFunc(monomial_qtuv(1, 1));
    CHECK(ratio == expected);
    CHECK(divides_back(expected, one_minus_qt, one_minus_monomial(2, 2)));
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), Error);
}

TEST_CASE("canonical form") {
    RatFunc a = (RatFunc(1) - q()) / one_minus_monomial(1, 1);
    CHECK((a - a).is_zero());
    CHECK((a - a) == RatFunc());
    // den = 1 whenever the value is polynomial
    RatFunc b = one_minus_monomial(2, 2) / one_minus_monomial(1, 1);
    CHECK(b.is_polynomial());
    // reduction normalizes content: (2-2q)/(2-2qt) = (1-q)/(1-qt)
    RatFunc c(ParamPoly(2) - ParamPoly(2) * ParamPoly::variable(Param::q),
              ParamPoly(2) - ParamPoly(2) * monomial_qtuv(1, 1));
    CHECK(c == a);
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("substitute_params") {
    RatFunc inv_qt = RatFunc(1) / one_minus_monomial(1, 1);
    // 1/(1-qt) with q -> 0 gives 1
    CHECK(inv_qt.substitute_params({{Param::q, RatFunc()}}) == RatFunc(1));
    // uv/(1-qt^2) with u -> s, v -> s (s realized as v) gives v^2/(1-qt^2)
    RatFunc f = (u() * v()) / one_minus_monomial(1, 2);
    RatFunc expected = (v() * v()) / one_minus_monomial(1, 2);
    CHECK(f.substitute_params({{Param::u, v()}, {Param::v, v()}}) == expected);
    // binding that kills a denominator is an error: 1/(1-q) with q -> 1
    RatFunc g = RatFunc(1) / (RatFunc(1) - q());
    CHECK_THROWS_AS(g.substitute_params({{Param::q, RatFunc(1)}}), Error);
}

TEST_CASE("substitute_params commutes with add/mul") {
    std::mt19937 rng(777);
    ParamBindings bind{{Param::q, RatFunc()}, {Param::t, t() * t()}};
    for (int trial = 0; trial < 20; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        bool ok_a = true, ok_b = true;
        RatFunc sa, sb;
        try {
            sa = a.substitute_params(bind);
        } catch (const Error&) {
            ok_a = false;
        }
        try {
            sb = b.substitute_params(bind);
        } catch (const Error&) {
            ok_b = false;
        }
        if (!ok_a || !ok_b) continue;
        try {
            CHECK((a + b).substitute_params(bind) == sa + sb);
            CHECK((a * b).substitute_params(bind) == sa * sb);
        } catch (const Error&) {
            // a+b / a*b can hit a vanishing denominator even when a, b do not
        }
    }
}

TEST_CASE("xpoly substitution and swaps") {
    int n = 2;
    XPoly x1 = XPoly::variable(n, 1), x2 = XPoly::variable(n, 2);
    XPoly p = x1 * x1 * x2; // x1^2 x2
    CHECK(p.swap_x(1, 2) == x1 * x2 * x2);
    XPoly sym = x1 * x2;
    CHECK(sym.swap_x(1, 2) == sym);
    CHECK((x1 + x2).substitute_x(1, x2) == x2 * RatFunc(2));
    // swap is an involution
    CHECK(p.swap_x(1, 2).swap_x(1, 2) == p);
}

TEST_CASE("xpoly exact division by x_i - x_j") {
    int n = 3;
    XPoly x1 = XPoly::variable(n, 1), x2 = XPoly::variable(n, 2), x3 = XPoly::variable(n, 3);
    XPoly f = (x1 - x2) * (x1 + x2 * RatFunc(3) + x3);
    auto quot = f.div_exact_linear(1, 2);
    REQUIRE(quot.has_value());
    CHECK(*quot == x1 + x2 * RatFunc(3) + x3);
    CHECK(!(x1 * x1).div_exact_linear(1, 2).has_value());
}

TEST_CASE("canonical renderings are stable") {
    CHECK(one_minus_monomial(1, 1).to_string() == "(1 - q t)");
    RatFunc coef = (RatFunc(1) - q()) / one_minus_monomial(1, 1);
    CHECK(coef.to_string() == "(1 - q)/(1 - q t)");
    int n = 2;
    XPoly p = XPoly::variable(n, 1) * XPoly::variable(n, 2) * coef +
              XPoly::variable(n, 1) * RatFunc(2);
    CHECK(p.to_text() == "2 * x1 + (1 - q)/(1 - q t) * x1 x2");
    CHECK(p.to_json().find("\"xexp\"") != std::string::npos);
}

TEST_CASE("parampoly gcd handles multivariate content") {
    ParamPoly a = monomial_qtuv(1, 1) - monomial_qtuv(2, 2); // qt(1 - qt)
    ParamPoly b = ParamPoly(1) - monomial_qtuv(2, 2);        // (1-qt)(1+qt)
    ParamPoly g = ParamPoly::gcd(a, b);
    CHECK(g == ParamPoly(1) - monomial_qtuv(1, 1));
}
