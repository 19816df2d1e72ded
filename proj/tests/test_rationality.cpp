#include "doctest.h"

#include "quot/cobordism.hpp"
#include "quot/geometry.hpp"
#include "quot/rationality.hpp"

using namespace quot;

namespace {

Series<Rat> geometric(long trunc) {
    Series<Rat> s = Series<Rat>::zeroes(0, trunc, Rat(0));
    for (long n = 0; n < trunc; ++n)
        s.set(n, Rat(1));
    return s;
}

} // namespace

TEST_CASE("geometric series") {
    FitRequest req;
    req.series = geometric(12);
    req.degNum = 3;
    req.degDen = 3;
    FitResult res = fit_rational(req);
    REQUIRE(res.found);
    CHECK(res.fn.num == Poly{Rat(1)});
    CHECK(res.fn.den == Poly{Rat(1), Rat(-1)});
    CHECK(res.fn.shift == 0);
    CHECK(pole_order_at_one(res.fn) == 1);
    CHECK(all_poles_at_one(res.fn));
    CHECK(agree(expand(res.fn, 12), req.series));
}

TEST_CASE("first tautological slice fits -q/(1-q)^2") {
    ClosedFormParams p;
    p.K2 = 1;
    p.c1K = 1;
    p.rank = 1;
    FitRequest req;
    req.series = closed_form(ClosedForm::taut1, p, 14).with_valuation(0);
    req.degNum = 4;
    req.degDen = 4;
    FitResult res = fit_rational(req);
    REQUIRE(res.found);
    CHECK(res.fn.num == Poly{Rat(0), Rat(-1)});
    CHECK(res.fn.den == Poly{Rat(1), Rat(-2), Rat(1)});
    CHECK(pole_order_at_one(res.fn) == 2);
    CHECK(all_poles_at_one(res.fn));

    // minimality round trip: re-fitting the expansion returns the same pair
    FitRequest again;
    again.series = expand(res.fn, 14);
    again.degNum = 4;
    again.degDen = 4;
    FitResult res2 = fit_rational(again);
    REQUIRE(res2.found);
    CHECK(res2.fn.num == res.fn.num);
    CHECK(res2.fn.den == res.fn.den);
}

TEST_CASE("Laurent shift is reported") {
    FitRequest req;
    req.series = geometric(12).shifted(-2);
    req.degNum = 2;
    req.degDen = 2;
    FitResult res = fit_rational(req);
    REQUIRE(res.found);
    CHECK(res.fn.shift == -2);
    CHECK(res.fn.num == Poly{Rat(1)});
    CHECK(res.fn.den == Poly{Rat(1), Rat(-1)});
    CHECK(agree(expand(res.fn, 10), req.series.truncated(10)));
}

TEST_CASE("polynomials have no pole") {
    Series<Rat> s = Series<Rat>::zeroes(0, 12, Rat(0));
    s.set(0, Rat(1));
    s.set(1, Rat(2));
    s.set(2, Rat(1)); // (1+q)^2
    FitRequest req{s, 3, 3, 5};
    FitResult res = fit_rational(req);
    REQUIRE(res.found);
    CHECK(res.fn.den == Poly{Rat(1)});
    CHECK(pole_order_at_one(res.fn) == 0);
    CHECK(all_poles_at_one(res.fn));
}

TEST_CASE("window guard") {
    FitRequest req{geometric(8), 4, 4, 5};
    CHECK_THROWS_AS(fit_rational(req), InsufficientData);
}

TEST_CASE("pole bound for jet-extracted slices") {
    // N = 1 wedge series with total jet order k: pole at q=1 of order <= 2k,
    // no other poles.
    for (long k : {1L, 2L, 3L})
        for (long K2 : {-1L, 2L})
            for (long c1K : {0L, 2L})
                for (long r : {0L, 1L}) {
                    CAPTURE(k);
                    CAPTURE(K2);
                    CAPTURE(c1K);
                    CAPTURE(r);
                    long T = (2 * k + 2) + 2 * k + 1 + 5;
                    Decomposition dz;
                    dz.parts = {DecompPart{Rat(1), 0, {0}}};
                    auto s = assemble_wedge(GenusSpec::ktheory(1, {r}), {K2, 1},
                                            {{r, c1K, 0, 0}}, {dz},
                                            {static_cast<int>(k)}, T);
                    FitRequest req{s, 2 * k + 2, 2 * k, 5};
                    FitResult res = fit_rational(req);
                    REQUIRE(res.found);
                    CHECK(pole_order_at_one(res.fn) <= 2 * k);
                    CHECK(all_poles_at_one(res.fn));
                    CHECK(agree(expand(res.fn, T), s));
                }
    // mixed orders across two classes, sum of orders 3
    long T = 8 + 6 + 1 + 5;
    Decomposition dz;
    dz.parts = {DecompPart{Rat(1), 0, {0, 0}}};
    auto s = assemble_wedge(GenusSpec::ktheory(1, {1, -1}), {1, 1},
                            {{1, 1, 0, 0}, {-1, 0, 0, 0}}, {dz}, {1, 2}, T);
    FitRequest req{s, 8, 6, 5};
    FitResult res = fit_rational(req);
    REQUIRE(res.found);
    CHECK(pole_order_at_one(res.fn) <= 6);
    CHECK(all_poles_at_one(res.fn));
}

TEST_CASE("irrationality witness") {
    Series<Jet> a = pontryagin_A(Jet(Rat(1)), 25);
    FitRequest req;
    req.series = y_derivative(a, {});
    req.degNum = 8;
    req.degDen = 8;
    FitResult res = fit_rational(req);
    CHECK(!res.found);
    CHECK(res.boundsNum == 8);
    CHECK(res.boundsDen == 8);
}
