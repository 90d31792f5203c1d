#include <random>

#include "doctest.h"
#include "tropmirror/core.hpp"

using namespace tropmirror;

namespace {

NovikovSeries mono(long long c, const std::string& e) {
    return NovikovSeries::monomial(Rational(c), parse_rational(e));
}

// Small random series generator for the ring-law property tests.
NovikovSeries random_series(std::mt19937& rng, bool with_cutoff) {
    std::uniform_int_distribution<int> nterms(0, 3), coef(-4, 4), num(0, 6), den(1, 3);
    std::vector<NovikovTerm> ts;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        ts.push_back(NovikovTerm{Rational(coef(rng)), Rational(num(rng)) / den(rng)});
    std::optional<Rational> cut;
    if (with_cutoff) cut = Rational(3);
    return NovikovSeries(std::move(ts), cut);
}

ChartExpression random_expr(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> nterms(1, 3), e(-2, 2), p(0, 2);
    ChartExpression acc = ChartExpression::zero(nvars, 1);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExponentVector m(nvars);
        for (int j = 0; j < nvars; ++j) m[j] = e(rng);
        acc = expr_add(acc, ChartExpression::monomial1(nvars, random_series(rng, false), m, p(rng)));
    }
    return acc;
}

}  // namespace

TEST_CASE("rational parse and format round trip") {
    CHECK(rational_str(parse_rational("5")) == "5");
    CHECK(rational_str(parse_rational("-3/6")) == "-1/2");
    CHECK(parse_rational("4/2") == Rational(2));
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("series_mul basics") {
    // identity
    CHECK(series_mul(NovikovSeries::one(), mono(7, "3/2")) == mono(7, "3/2"));
    // difference of squares with truncation: (1 + T^{1/2})(1 - T^{1/2}) cutoff 1 -> 1
    NovikovSeries a({NovikovTerm{1, 0}, NovikovTerm{1, Rational(1) / 2}}, Rational(1));
    NovikovSeries b({NovikovTerm{1, 0}, NovikovTerm{-1, Rational(1) / 2}}, Rational(1));
    NovikovSeries prod = series_mul(a, b);
    CHECK(prod.terms().size() == 1);
    CHECK(prod.terms()[0] == NovikovTerm{1, 0});
    CHECK(prod.cutoff() == Rational(1));
    // monomial product
    CHECK(series_mul(mono(2, "1/3"), mono(3, "2/3")) == mono(6, "1"));
}

TEST_CASE("series_invert") {
    // geometric series: (1 + T^{1/2})^{-1} = 1 - T^{1/2} + T, cutoff 3/2
    NovikovSeries a({NovikovTerm{1, 0}, NovikovTerm{1, Rational(1) / 2}}, Rational(3) / 2);
    NovikovSeries inv = series_invert(a);
    NovikovSeries expect({NovikovTerm{1, 0}, NovikovTerm{-1, Rational(1) / 2}, NovikovTerm{1, 1}},
                         Rational(3) / 2);
    CHECK(inv == expect);
    // multiplying back gives 1 up to the cutoff
    CHECK(series_mul(a, inv).is_one());
    // monomial
    CHECK(series_invert(mono(2, "5")) == NovikovSeries::monomial(Rational(1) / 2, -5));
    CHECK_THROWS_AS(series_invert(NovikovSeries::zero()), Error);
    try {
        series_invert(NovikovSeries::zero());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroSeries);
    }
}

TEST_CASE("series ring laws on random inputs") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        NovikovSeries a = random_series(rng, false);
        NovikovSeries b = random_series(rng, false);
        NovikovSeries c = random_series(rng, false);
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
        CHECK(series_add(a, b) == series_add(b, a));
    }
}

TEST_CASE("series invert round trip for valuation-zero units") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-3, 3), num(1, 5), den(1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<NovikovTerm> ts{NovikovTerm{1, 0}};
        int k = iter % 3;
        for (int i = 0; i < k; ++i)
            ts.push_back(NovikovTerm{Rational(coef(rng)), Rational(num(rng)) / den(rng)});
        NovikovSeries a(std::move(ts), Rational(3));
        NovikovSeries prod = series_mul(a, series_invert(a));
        CHECK(prod.terms().size() == 1);
        CHECK(prod.terms()[0] == NovikovTerm{1, 0});
    }
}

TEST_CASE("normalization is idempotent") {
    std::vector<NovikovTerm> raw{{Rational(2), Rational(1)},
                                 {Rational(-2), Rational(1)},
                                 {Rational(3), Rational(0)},
                                 {Rational(1), Rational(5)}};
    NovikovSeries once(raw, Rational(4));
    NovikovSeries twice(once.terms(), once.cutoff());
    CHECK(once == twice);
}

TEST_CASE("1 + T^{-eps} w0 normalizes to v0 for every rational eps > 0") {
    for (const char* es : {"1", "1/10", "7/3", "2/1000"}) {
        Rational eps = parse_rational(es);
        ChartExpression w0 = w0_expression(2, 1, eps);
        ChartExpression lhs = expr_add(
            ChartExpression::one(2, 1),
            expr_mul(ChartExpression::monomial1(2, NovikovSeries::monomial(1, -eps), {0, 0}, 0), w0));
        ChartExpression v0 = ChartExpression::monomial1(2, NovikovSeries::one(), {0, 0}, 1);
        CHECK(lhs == v0);
    }
}

TEST_CASE("expr_pow") {
    Rational eps = parse_rational("1/10");
    ChartExpression w0 = w0_expression(2, 1, eps);
    ChartExpression u = expr_add(
        ChartExpression::one(2, 1),
        expr_mul(ChartExpression::monomial1(2, NovikovSeries::monomial(1, -eps), {0, 0}, 0), w0));
    SUBCASE("(1+T^{-eps}w0)^2 = v0^2") {
        ChartExpression sq = expr_pow(u, 2);
        CHECK(sq == ChartExpression::monomial1(2, NovikovSeries::one(), {0, 0}, 2));
    }
    SUBCASE("e^0 = 1") {
        std::mt19937 rng(99);
        ChartExpression e = random_expr(rng, 2);
        CHECK(expr_pow(e, 0) == ChartExpression::one(2, 1));
    }
    SUBCASE("binomial expansion sums to the power, k = 3") {
        // sum_l binom(3,l) (T^{-eps} w0)^l == (1 + T^{-eps} w0)^3
        ChartExpression tw = expr_mul(
            ChartExpression::monomial1(2, NovikovSeries::monomial(1, -eps), {0, 0}, 0), w0);
        long long binom[4] = {1, 3, 3, 1};
        ChartExpression sum = ChartExpression::zero(2, 1);
        for (int l = 0; l <= 3; ++l)
            sum = expr_add(sum, expr_scale(NovikovSeries::constant(binom[l]), expr_pow(tw, l)));
        CHECK(sum == expr_pow(u, 3));
    }
    SUBCASE("negative powers of units") {
        CHECK(expr_pow(u, -2) == ChartExpression::monomial1(2, NovikovSeries::one(), {0, 0}, -2));
        ChartExpression v = ChartExpression::monomial1(2, mono(3, "1/2"), {1, -1}, 0);
        ChartExpression vi = expr_pow(v, -1);
        CHECK(expr_mul(v, vi) == ChartExpression::one(2, 1));
    }
    SUBCASE("negative power of a non-unit throws NotInvertible") {
        ChartExpression bad = expr_add(ChartExpression::monomial1(2, mono(1, "0"), {1, 0}, 0),
                                       ChartExpression::monomial1(2, mono(1, "0"), {0, 1}, 0));
        CHECK_THROWS_AS(expr_pow(bad, -1, Rational(3)), Error);
    }
    SUBCASE("multi-term inverse needs a cutoff") {
        ChartExpression e = expr_add(ChartExpression::one(2, 1),
                                     ChartExpression::monomial1(2, mono(1, "1/2"), {1, 0}, 0));
        CHECK_THROWS_AS(expr_invert(e), Error);
        ChartExpression inv = expr_invert(e, Rational(2));
        CHECK(expr_equal_mod(expr_mul(e, inv), ChartExpression::one(2, 1), Rational(2)));
    }
}

TEST_CASE("chart expression ring laws on random inputs") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 60; ++iter) {
        ChartExpression a = random_expr(rng, 2);
        ChartExpression b = random_expr(rng, 2);
        ChartExpression c = random_expr(rng, 2);
        CHECK(expr_mul(expr_mul(a, b), c) == expr_mul(a, expr_mul(b, c)));
        CHECK(expr_mul(a, expr_add(b, c)) == expr_add(expr_mul(a, b), expr_mul(a, c)));
        CHECK(expr_add(a, b) == expr_add(b, a));
        CHECK(expr_add(expr_sub(a, b), b) == a);
    }
}

TEST_CASE("regularity flag") {
    ChartExpression reg = ChartExpression::monomial1(2, NovikovSeries::one(), {1, -3}, 2);
    ChartExpression irr = ChartExpression::monomial1(2, NovikovSeries::one(), {1, 0}, -1);
    CHECK(reg.regular_on_Y());
    CHECK(!irr.regular_on_Y());
}
