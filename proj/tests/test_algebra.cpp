#include "doctest.h"

#include <random>

#include "quot/jet.hpp"
#include "quot/lagrange.hpp"
#include "quot/series.hpp"

using namespace quot;

namespace {

Series<Rat> geometric(long trunc) { // 1/(1-q)
    Series<Rat> s = Series<Rat>::zeroes(0, trunc, Rat(0));
    for (long n = 0; n < trunc; ++n)
        s.set(n, Rat(1));
    return s;
}

Series<Rat> random_series(std::mt19937_64& rng, long trunc, bool unit) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    Series<Rat> s = Series<Rat>::zeroes(0, trunc, Rat(0));
    for (long n = 0; n < trunc; ++n)
        s.set(n, rat(num(rng), den(rng)));
    if (unit && sgn(s.coeff(0)) == 0)
        s.set(0, Rat(1));
    return s;
}

} // namespace

TEST_CASE("series ring basics") {
    long T = 8;
    Series<Rat> one = Series<Rat>::constant(Rat(1), T);
    Series<Rat> q = Series<Rat>::variable(T, Rat(0));

    SUBCASE("geometric series via pow_int(-1)") {
        Series<Rat> g = (one - q).pow_int(-1);
        CHECK(agree(g, geometric(T - 1)));
    }
    SUBCASE("(1+q)(1-q) = 1-q^2") {
        Series<Rat> p = (one + q) * (one - q);
        CHECK(p.coeff(0) == Rat(1));
        CHECK(p.coeff(1) == Rat(0));
        CHECK(p.coeff(2) == Rat(-1));
    }
    SUBCASE("Laurent shift under division") {
        Series<Rat> a = q + q * q; // q + q^2
        Series<Rat> r = a / q;
        CHECK(r.valuation() <= 0);
        CHECK(r.coeff(0) == Rat(1));
        CHECK(r.coeff(1) == Rat(1));
        Series<Rat> inv_q = one / q;
        CHECK(inv_q.valuation() == -1);
        CHECK(inv_q.coeff(-1) == Rat(1));
    }
    SUBCASE("ring axioms on random samples") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 10; ++i) {
            auto a = random_series(rng, T, false), b = random_series(rng, T, false),
                 c = random_series(rng, T, false);
            CHECK(agree((a + b) + c, a + (b + c)));
            CHECK(agree(a * (b + c), a * b + a * c));
            CHECK(agree((a * b) * c, a * (b * c)));
        }
    }
    SUBCASE("mul then div by a unit is identity") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 10; ++i) {
            auto a = random_series(rng, T, false);
            auto u = random_series(rng, T, true);
            CHECK(agree((a * u) / u, a));
        }
    }
    SUBCASE("division by a non-unit jet leading coefficient throws") {
        JetCtx ctx = make_jet_context({"y"}, {2});
        Series<Jet> y = Series<Jet>::constant(Jet::variable(ctx, 0), 5);
        Series<Jet> num = Series<Jet>::constant(Jet(ctx, Rat(1)), 5);
        CHECK_THROWS_AS(num / y, DivisionByNonUnit);
    }
}

TEST_CASE("series calculus") {
    long T = 8;
    Series<Rat> one = Series<Rat>::constant(Rat(1), T);
    Series<Rat> q = Series<Rat>::variable(T, Rat(0));

    SUBCASE("exp(q)") {
        Series<Rat> e = series_exp(q);
        CHECK(e.coeff(0) == Rat(1));
        CHECK(e.coeff(1) == Rat(1));
        CHECK(e.coeff(2) == rat(1, 2));
        CHECK(e.coeff(3) == rat(1, 6));
    }
    SUBCASE("log(1-q)") {
        Series<Rat> l = series_log(one - q);
        CHECK(l.coeff(1) == Rat(-1));
        CHECK(l.coeff(2) == rat(-1, 2));
        CHECK(l.coeff(3) == rat(-1, 3));
    }
    SUBCASE("derivative of q/(1-q) is 1/(1-q)^2") {
        Series<Rat> f = q / (one - q);
        Series<Rat> d = derivative(f);
        Series<Rat> g = (one - q).pow_int(-2);
        CHECK(agree(d, g));
    }
    SUBCASE("exp/log round trips") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 8; ++i) {
            Series<Rat> s = random_series(rng, T, false);
            s.set(0, Rat(0));
            CHECK(agree(series_log(series_exp(s)), s));
            Series<Rat> u = one + s;
            CHECK(agree(series_exp(series_log(u)), u));
        }
    }
    SUBCASE("exp requires zero constant term") {
        CHECK_THROWS_AS(series_exp(one), BadConstantTerm);
        CHECK_THROWS_AS(series_log(q), BadConstantTerm);
    }
}

TEST_CASE("jets") {
    JetCtx ctx = make_jet_context({"y1", "y2"}, {2, 3});
    Jet y1 = Jet::variable(ctx, 0), y2 = Jet::variable(ctx, 1);

    SUBCASE("per-variable caps, not total degree") {
        Jet p = (Jet(ctx, Rat(1)) + y1 + y2).pow(4);
        CHECK(p.coeff({2, 2}) > 0);   // total degree 4 survives
        CHECK(p.coeff({3, 0}) == 0);  // but y1^3 is capped away
    }
    SUBCASE("inverse") {
        Jet u = Jet(ctx, Rat(2)) + y1 + y2 * y2;
        Jet prod = u * u.inverse();
        CHECK(prod == Jet(ctx, Rat(1)));
        CHECK_THROWS_AS(y1.inverse(), DivisionByNonUnit);
    }
    SUBCASE("eval substitutes numeric values") {
        Jet u = Jet(ctx, Rat(1)) + y1.scale(Rat(3)) + (y1 * y2).scale(Rat(2));
        CHECK(u.eval({rat(1, 2), Rat(4)}) == Rat(1) + rat(3, 2) + Rat(4));
    }
}

TEST_CASE("reversion") {
    SUBCASE("phi = 1 gives x = q") {
        Series<Rat> phi = Series<Rat>::constant(Rat(1), 8, "x");
        Series<Rat> x = reversion(phi);
        CHECK(x.coeff(1) == Rat(1));
        for (long n = 2; n < 8; ++n)
            CHECK(x.coeff(n) == Rat(0));
    }
    SUBCASE("phi = 1/(1-x) gives Catalan numbers") {
        long T = 8;
        Series<Rat> one = Series<Rat>::constant(Rat(1), T, "x");
        Series<Rat> xv = Series<Rat>::variable(T, Rat(0), "x");
        Series<Rat> phi = one / (one - xv);
        Series<Rat> x = reversion(phi);
        CHECK(x.coeff(1) == Rat(1));
        CHECK(x.coeff(2) == Rat(1));
        CHECK(x.coeff(3) == Rat(2));
        CHECK(x.coeff(4) == Rat(5));
        CHECK(x.coeff(5) == Rat(14));
    }
    SUBCASE("compose-back reproduces q") {
        std::mt19937_64 rng(19);
        for (int i = 0; i < 6; ++i) {
            Series<Rat> phi = random_series(rng, 9, true);
            Series<Rat> x = reversion(phi);
            Series<Rat> back = x / compose(phi, x); // x/phi(x) == q
            CHECK(back.coeff(1) == Rat(1));
            for (long n = back.valuation(); n < back.trunc(); ++n)
                if (n != 1)
                    CHECK(back.coeff(n) == Rat(0));
        }
    }
    SUBCASE("Pontryagin-genus reversion with one jet variable") {
        JetCtx ctx = make_jet_context({"y"}, {3});
        long T = 8;
        Jet one(ctx, Rat(1));
        Series<Jet> g = Series<Jet>::zeroes(0, T, one, "x");
        g.set(0, one);
        g.set(2, Jet::variable(ctx, 0)); // g = 1 + y x^2
        Series<Jet> h = reversion(g);
        CHECK(h.coeff(1) == one);
        CHECK(h.coeff(3) == Jet::variable(ctx, 0));
        CHECK(h.coeff(5) == Jet::variable(ctx, 0).pow(2).scale(Rat(2)));
    }
}

TEST_CASE("multivariable Lagrange-Buermann") {
    SUBCASE("l=1, phi=1, psi=1") {
        Series<Rat> phi = Series<Rat>::constant(Rat(1), 8, "x");
        JetCtx ctx = make_jet_context({"x0"}, {8});
        Series<Rat> z = lagrange_burmann_multi({phi}, Jet(ctx, Rat(1)));
        CHECK(z.coeff(0) == Rat(1));
        for (long n = 1; n < z.trunc(); ++n)
            CHECK(z.coeff(n) == Rat(0));
    }
    SUBCASE("l=1 against brute force") {
        long T = 9;
        Series<Rat> one = Series<Rat>::constant(Rat(1), T, "x");
        Series<Rat> xv = Series<Rat>::variable(T, Rat(0), "x");
        Series<Rat> phi = one / (one - xv);
        JetCtx ctx = make_jet_context({"x0"}, {9});
        Jet psi(ctx, Rat(1));
        Series<Rat> lhs = lagrange_burmann_multi({phi}, psi);
        Series<Rat> rhs = lagrange_burmann_multi_bruteforce({phi}, psi, 8);
        CHECK(agree(lhs, rhs));
    }
    SUBCASE("l=2 against the explicit double sum") {
        long T = 8;
        Series<Rat> one = Series<Rat>::constant(Rat(1), T, "x");
        Series<Rat> xv = Series<Rat>::variable(T, Rat(0), "x");
        Series<Rat> phi = one + xv;
        JetCtx ctx = make_jet_context({"x0", "x1"}, {8, 8});
        Jet psi = Jet::variable(ctx, 0) * Jet::variable(ctx, 1);
        Series<Rat> lhs = lagrange_burmann_multi({phi, phi}, psi);
        Series<Rat> rhs = lagrange_burmann_multi_bruteforce({phi, phi}, psi, 7);
        CHECK(agree(lhs, rhs));
    }
    SUBCASE("l=2 generic phis against brute force") {
        std::mt19937_64 rng(23);
        long T = 8;
        for (int i = 0; i < 3; ++i) {
            Series<Rat> p1 = random_series(rng, T, true), p2 = random_series(rng, T, true);
            JetCtx ctx = make_jet_context({"x0", "x1"}, {8, 8});
            Jet psi = Jet(ctx, Rat(1)) + Jet::variable(ctx, 0).scale(Rat(2)) +
                      Jet::variable(ctx, 1).pow(2);
            Series<Rat> lhs = lagrange_burmann_multi({p1, p2}, psi);
            Series<Rat> rhs = lagrange_burmann_multi_bruteforce({p1, p2}, psi, 7);
            CHECK(agree(lhs.truncated(7), rhs));
        }
    }
}
