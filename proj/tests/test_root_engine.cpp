#include "doctest.h"

#include "quot/root_engine.hpp"

using namespace quot;

namespace {

Series<Rat> cst(const Rat& v, long T) { return Series<Rat>::constant(v, T); }
Series<Rat> qvar(long T) { return Series<Rat>::variable(T, Rat(0)); }

// z^N - q(z-1)^N as a ZPoly, common window [0,T).
ZPoly<Rat> vieta_block_poly(long N, long T) {
    ZPoly<Rat> G;
    Series<Rat> q = qvar(T);
    for (long k = 0; k <= N; ++k) {
        // [z^k]: delta_{kN} - q * C(N,k) (-1)^{N-k}
        Rat c = binomial(N, k) * Rat((N - k) % 2 ? -1 : 1);
        Series<Rat> s = q.scale(-c);
        if (k == N)
            s = s + cst(Rat(1), T);
        G.push_back(s);
    }
    return G;
}

std::vector<Rat> monic_g0(long N) {
    std::vector<Rat> g0(static_cast<std::size_t>(N + 1), Rat(0));
    g0.back() = Rat(1);
    return g0;
}

Series<Rat> over_one_minus_q(const Rat& c, long T) { // c*q/(1-q)
    Series<Rat> q = qvar(T);
    return (q / (cst(Rat(1), T) - q)).scale(c);
}

} // namespace

TEST_CASE("hensel: single root block z(1-z) - q") {
    long T = 8;
    Series<Rat> q = qvar(T);
    ZPoly<Rat> G = {-q, cst(Rat(1), T), cst(Rat(-1), T)};
    auto [p, h] = hensel_factor(G, 1, monic_g0(1));
    // p = z - x(q) with x the Catalan series
    Series<Rat> x = -p.e[0];
    CHECK(x.coeff(1) == Rat(1));
    CHECK(x.coeff(2) == Rat(1));
    CHECK(x.coeff(3) == Rat(2));
    CHECK(x.coeff(4) == Rat(5));
    // cofactor is -(1 - ...) degree 1 in z? G = p*h exactly:
    REQUIRE(h.size() == 2);
    Series<Rat> c0 = p.e[0] * h[0];
    CHECK(agree(c0, G[0]));
}

TEST_CASE("hensel: Vieta identities for z^2 - q(z-1)^2") {
    long T = 10;
    auto [p, h] = hensel_factor(vieta_block_poly(2, T), 2, monic_g0(2));
    CHECK(agree(p.e[0], over_one_minus_q(Rat(2), T)));  // e_1 = 2q/(1-q)
    CHECK(agree(p.e[1], over_one_minus_q(Rat(-1), T))); // e_2 = -q/(1-q)
}

TEST_CASE("hensel: product reproduces G for all N <= 5") {
    long T = 9;
    for (long N = 1; N <= 5; ++N) {
        ZPoly<Rat> G = vieta_block_poly(N, T);
        auto [p, h] = hensel_factor(G, N, monic_g0(N));
        REQUIRE(h.size() == 1);
        for (long k = 0; k <= N; ++k) {
            Series<Rat> pk = p.zcoeff(k, T);
            CHECK(agree(pk * h[0], G[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("hensel: jet coefficients, dz/dy for N=1 r=1") {
    long T = 8;
    JetCtx ctx = make_jet_context({"y"}, {1});
    Jet one(ctx, Rat(1)), y = Jet::variable(ctx, 0);
    auto C = [&](const Jet& j) { return Series<Jet>::constant(j, T); };
    Series<Jet> q = Series<Jet>::variable(T, one);
    Series<Rat> q0 = qvar(T);
    Series<Rat> geom = (cst(Rat(1), T) - q0).pow_int(-1); // 1/(1-q)

    SUBCASE("z(1-z)/(1-z+y) = q gives dz/dy = q/(1-q)") {
        // G = z(1-z) - q(1-z+y) = -q(1+y) + (1+q)z - z^2
        ZPoly<Jet> G = {-q.scale_c(one + y), C(one) + q, C(-one)};
        auto [p, h] = hensel_factor(G, 1, {Jet(ctx, Rat(0)), Jet(ctx, Rat(1))});
        Series<Rat> z0 = extract_monomial(-p.e[0], {0});
        CHECK(agree(z0, q0)); // z|_{y=0} = q
        Series<Rat> dz = extract_monomial(-p.e[0], {1});
        CHECK(agree(dz, q0 * geom));
    }
    SUBCASE("-z = q(1-z)(1+y(1-z)) gives dz/dy = z(1-z)^2") {
        // (1-z)(1+y(1-z)) = (1+y) - (1+2y) z + y z^2
        ZPoly<Jet> G = {q.scale_c(one + y), C(one) - q.scale_c(one + y.scale(Rat(2))),
                        q.scale_c(y)};
        auto [p, h] = hensel_factor(G, 1, {Jet(ctx, Rat(0)), Jet(ctx, Rat(1))});
        Series<Rat> dz = extract_monomial(-p.e[0], {1});
        // z|_{y=0} = -q/(1-q), 1-z = 1/(1-q), so dz/dy = -q/(1-q)^3
        Series<Rat> expect = -(q0 * geom.pow_int(3));
        CHECK(agree(dz, expect));
    }
}

TEST_CASE("hensel: non-coprime initial factors raise NonUnitResultant") {
    long T = 6;
    // G = z^2 - q: at q=0 G0 = z^2; declaring N=1 with g0=z leaves h0=z,
    // Res(z, z) = 0.
    Series<Rat> q = qvar(T);
    ZPoly<Rat> G = {-q, cst(Rat(0), T), cst(Rat(1), T)};
    CHECK_THROWS_AS(hensel_factor(G, 1, monic_g0(1)), NonUnitResultant);
}

TEST_CASE("trace and norm on constant-coefficient blocks") {
    long T = 6;
    MonicSeriesPoly<Rat> p; // z^2 - 3z + 2, roots 1 and 2
    p.N = 2;
    p.e = {cst(Rat(-3), T), cst(Rat(2), T)};
    QuotientRing<Rat> Q(p);

    RootExpr<Rat> z = RootExpr<Rat>::poly({cst(Rat(0), T), cst(Rat(1), T)});
    CHECK(trace_eval(p, z).coeff(0) == Rat(3));
    CHECK(norm_eval(p, z).coeff(0) == Rat(2));

    RootExpr<Rat> inv_z;
    inv_z.num = {cst(Rat(1), T)};
    inv_z.den = {cst(Rat(0), T), cst(Rat(1), T)};
    CHECK(trace_eval(p, inv_z).coeff(0) == rat(3, 2));

    // discriminant: (1-2)(2-1) = -1
    CHECK(resultant_pair(p, p, Coupling::discr()).coeff(0) == Rat(-1));

    // explicit root substitution for a random polynomial expression
    RootExpr<Rat> poly3 =
        RootExpr<Rat>::poly({cst(Rat(5), T), cst(Rat(-1), T), cst(Rat(2), T)});
    auto f = [](const Rat& zz) -> Rat { return Rat(5) - zz + Rat(2) * zz * zz; };
    CHECK(trace_eval(p, poly3).coeff(0) == f(Rat(1)) + f(Rat(2)));
    CHECK(norm_eval(p, poly3).coeff(0) == f(Rat(1)) * f(Rat(2)));
}

TEST_CASE("trace on the Vieta block; Newton's identities") {
    long T = 10;
    for (long N = 2; N <= 4; ++N) {
        auto [p, h] = hensel_factor(vieta_block_poly(N, T), N, monic_g0(N));
        RootExpr<Rat> z = RootExpr<Rat>::poly({cst(Rat(0), T), cst(Rat(1), T)});
        CHECK(agree(trace_eval(p, z), over_one_minus_q(Rat(-N), T)));

        // Newton's identities for monic p = z^N + a_1 z^{N-1} + ... + a_N:
        // p_k = -(a_1 p_{k-1} + ... + a_{min(k-1,N)} p_{k-min(k-1,N)})
        //       - k a_k [k <= N]
        std::vector<Series<Rat>> psums = {cst(Rat(N), T)};
        for (long k = 1; k <= 6; ++k) {
            Series<Rat> pk = Series<Rat>::zeroes(0, T, Rat(0));
            for (long i = 1; i <= std::min(k - 1, N); ++i)
                pk = pk - (p.e[static_cast<std::size_t>(i - 1)] *
                           psums[static_cast<std::size_t>(k - i)])
                              .truncated(T)
                              .with_valuation(0);
            if (k <= N)
                pk = pk - p.e[static_cast<std::size_t>(k - 1)].scale(Rat(k));
            psums.push_back(pk);
            RootExpr<Rat> zk = z.pow(k);
            CHECK(agree(trace_eval(p, zk), pk));
        }
    }
}

TEST_CASE("norm consistency with e_N; Laurent z-inverse traces") {
    long T = 9;
    for (long N = 1; N <= 4; ++N) {
        auto [p, h] = hensel_factor(vieta_block_poly(N, T), N, monic_g0(N));
        RootExpr<Rat> z = RootExpr<Rat>::poly({cst(Rat(0), T), cst(Rat(1), T)});
        Series<Rat> nz = norm_eval(p, z);
        Series<Rat> expect = p.e.back().scale(Rat(N % 2 ? -1 : 1)); // (-1)^N e_N
        CHECK(agree(nz, expect));

        // trace(z^{-1}) = e_{N-1}... via -e_{N-1}/e_N with sign bookkeeping:
        // sum 1/z_i = e_{N-1}(-1)^{N-1} / ((-1)^N e_N) (ratio of symmetric fns)
        RootExpr<Rat> zinv;
        zinv.zshift = 1;
        Series<Rat> tr = trace_eval(p, zinv);
        Series<Rat> eNm1 = N >= 2 ? p.e[static_cast<std::size_t>(N - 2)] : cst(Rat(1), T);
        Series<Rat> want = -(eNm1 / p.e.back());
        CHECK(agree(tr, want));
    }
}

TEST_CASE("resultant_pair discriminant on the N=2 block") {
    long T = 9;
    auto [p, h] = hensel_factor(vieta_block_poly(2, T), 2, monic_g0(2));
    Series<Rat> disc = resultant_pair(p, p, Coupling::discr());
    // -(e_1^2 - 4 e_2)
    Series<Rat> e1 = p.e[0], e2 = p.e[1];
    Series<Rat> expect = -(e1 * e1 - e2.scale(Rat(4)));
    CHECK(agree(disc, expect));
}

TEST_CASE("resultant_pair mixed blocks, brute force on the quadratic") {
    // Blocks from z^N (1-z)^r - q with N=r=1: G(z) = z(1-z) - q = -z^2 + z - q.
    // Both the z-block (root H) and the w-block (root H~ of the same equation)
    // are degree 1; prod(1 - H - H~) computed two ways.
    long T = 8;
    Series<Rat> q = qvar(T);
    ZPoly<Rat> G = {-q, cst(Rat(1), T), cst(Rat(-1), T)};
    auto [p, h] = hensel_factor(G, 1, monic_g0(1));
    // The full quadratic -z^2+z-q has roots H and 1-H', i.e. the two roots sum
    // to 1 and multiply to q. With s = p (same block), 1 - H - H~ where both
    // run over the single root x(q): value 1 - 2x(q).
    Series<Rat> res = resultant_pair(p, p, Coupling::affine(Rat(1), Rat(-1), Rat(-1)));
    Series<Rat> x = -p.e[0];
    CHECK(agree(res, cst(Rat(1), T) - x.scale(Rat(2))));
}

TEST_CASE("newton_root") {
    long T = 9;
    SUBCASE("q = t(1-t) equals reversion of 1/(1-x)") {
        Series<Rat> q = qvar(T);
        ZPoly<Rat> G = {-q, cst(Rat(1), T), cst(Rat(-1), T)};
        Series<Rat> t = newton_root(G, Rat(0));
        CHECK(t.coeff(1) == Rat(1));
        CHECK(t.coeff(2) == Rat(1));
        CHECK(t.coeff(3) == Rat(2));
        CHECK(t.coeff(4) == Rat(5));
    }
    SUBCASE("u and v expansions of the rank-one lemma") {
        // -q = u/((1-u)(t+(1-t)u)) => G(u) = u + q(1-u)(t+(1-t)u)
        //                              = qt + (1+q(1-2t))u - q(1-t)u^2
        JetCtx ctx = make_jet_context({"t"}, {3});
        Jet one(ctx, Rat(1)), t = Jet::variable(ctx, 0);
        Series<Jet> q = Series<Jet>::variable(T, one);
        ZPoly<Jet> G = {q.scale_c(t),
                        Series<Jet>::constant(one, T) + q.scale_c(one - t.scale(Rat(2))),
                        -q.scale_c(one - t)};
        Series<Jet> u = newton_root(G, Jet(ctx, Rat(0)));
        // t^1 coefficient: -q/(1+q); t^2 coefficient: -q^2(2+q)/(1+q)^3
        Series<Rat> u1 = extract_monomial(u, {1});
        Series<Rat> u2 = extract_monomial(u, {2});
        Series<Rat> qq = qvar(T);
        Series<Rat> onep = cst(Rat(1), T) + qq;
        CHECK(agree(u1, -(qq / onep)));
        CHECK(agree(u2, -(qq * qq * (cst(Rat(2), T) + qq)) / onep.pow_int(3)));
        // closed-form coefficients a_{n,k}
        CHECK(lemma_uv_coeffs(1, 1) == Rat(-1));
        for (long n = 1; n <= 8; ++n) {
            CHECK(lemma_uv_coeffs(n, 1) == Rat(n % 2 ? -1 : 1));
            Rat a2 = lemma_uv_coeffs(n, 2);
            Rat expect = Rat((n + 1) % 2 ? -1 : 1) * Rat((n - 1) * (n + 2)) / Rat(2);
            CHECK(a2 == expect);
        }
        for (long n = 1; n <= 8; ++n)
            for (long k = 1; k <= 3; ++k)
                if (n < T)
                    CHECK(u.coeff(n).coeff({static_cast<int>(k)}) == lemma_uv_coeffs(n, k));
    }
    SUBCASE("singular jacobian is refused") {
        Series<Rat> q = qvar(T);
        ZPoly<Rat> G = {-q, cst(Rat(0), T), cst(Rat(1), T)}; // z^2 = q
        CHECK_THROWS_AS(newton_root(G, Rat(0)), SingularJacobian);
    }
}

TEST_CASE("weighted-block continuity of the factorization") {
    long T = 8;
    // G = (z+w1)(z+w2)...(z+wN) - q(z-1)^N has leading coefficient 1-q, and
    // e_i(w,q) = e_i(w,0)/(1-q) + e_i(0,q) holds exactly (N = 2, 3).
    for (long N = 2; N <= 3; ++N) {
        std::vector<Rat> w = {rat(1, 3), rat(1, 5), rat(1, 7)};
        w.resize(static_cast<std::size_t>(N));
        // prod (z + w_k)
        std::vector<Rat> prod = {Rat(1)};
        for (long k = 0; k < N; ++k) {
            std::vector<Rat> nxt(prod.size() + 1, Rat(0));
            for (std::size_t i = 0; i < prod.size(); ++i) {
                nxt[i + 1] += prod[i];
                nxt[i] += prod[i] * w[static_cast<std::size_t>(k)];
            }
            prod = nxt;
        }
        std::reverse(prod.begin(), prod.end()); // now descending... flip back
        std::reverse(prod.begin(), prod.end());
        Series<Rat> q = qvar(T);
        ZPoly<Rat> G;
        for (long k = 0; k <= N; ++k) {
            Rat c = binomial(N, k) * Rat((N - k) % 2 ? -1 : 1); // (z-1)^N coefficient
            Series<Rat> s = cst(prod[static_cast<std::size_t>(k)], T) - q.scale(c);
            G.push_back(s);
        }
        std::vector<Rat> g0 = prod;
        auto [pw, hw] = hensel_factor(G, N, g0);
        auto [p0, h0] = hensel_factor(vieta_block_poly(N, T), N, monic_g0(N));
        Series<Rat> denom = cst(Rat(1), T) - q;
        for (long i = 1; i <= N; ++i) {
            Series<Rat> lhs = pw.e[static_cast<std::size_t>(i - 1)];
            Rat ei0 = pw.e[static_cast<std::size_t>(i - 1)].coeff(0);
            Series<Rat> rhs = cst(ei0, T) / denom + p0.e[static_cast<std::size_t>(i - 1)];
            for (long n = 0; n < 6; ++n)
                CHECK(lhs.coeff(n) == rhs.coeff(n));
        }
    }
    // jet continuity: s^0 slice of the jet-weighted run equals the w=0 run
    {
        long N = 2;
        JetCtx ctx = make_jet_context({"s"}, {1});
        Jet one(ctx, Rat(1)), s = Jet::variable(ctx, 0);
        Jet w1 = s.scale(rat(1, 3)), w2 = s.scale(rat(1, 5));
        Series<Jet> q = Series<Jet>::variable(T, one);
        auto C = [&](const Jet& j) { return Series<Jet>::constant(j, T); };
        // (z+w1)(z+w2) - q(1-z)^2
        ZPoly<Jet> G = {C(w1 * w2) - q, C(w1 + w2) + q.scale(Rat(2)), C(one) - q};
        auto [pj, hj] = hensel_factor(G, 2, {w1 * w2, w1 + w2, one});
        auto [p0, h0] = hensel_factor(vieta_block_poly(2, T), 2, monic_g0(2));
        CHECK(agree(extract_monomial(pj.e[0], {0}), p0.e[0]));
        CHECK(agree(extract_monomial(pj.e[1], {0}), p0.e[1]));
    }
}
