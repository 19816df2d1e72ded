#include "quot/geometry.hpp"

#include <algorithm>
#include <tuple>

namespace quot {

namespace {

Series<Rat> geometric(long trunc) { // 1/(1-q)
    Series<Rat> s = Series<Rat>::zeroes(0, trunc, Rat(0));
    for (long n = 0; n < trunc; ++n)
        s.set(n, Rat(1));
    return s;
}

Series<Rat> rone(long trunc) { return Series<Rat>::constant(Rat(1), trunc); }

// Multiset-permutation denominator: product over groups of equal parts of
// (group size)!.
Rat mult_factorial(const std::vector<DecompPart>& parts) {
    std::vector<std::pair<DecompPart, long>> groups;
    for (const auto& p : parts) {
        bool found = false;
        for (auto& [g, m] : groups)
            if (g.sw == p.sw && g.biK == p.biK && g.biC1 == p.biC1) {
                ++m;
                found = true;
                break;
            }
        if (!found)
            groups.emplace_back(p, 1);
    }
    Rat f(1);
    for (const auto& [g, m] : groups)
        f *= factorial(m);
    return f;
}

} // namespace

Rat chi_hrr(const SurfaceNumbers& surface, const KClassNumbers& cls) {
    return Rat(cls.rank) * Rat(surface.chiO) + rat(cls.c1sq - cls.c1K, 2) - Rat(cls.c2);
}

Series<Jet> assemble_invariant(const GenusSpec& spec, const JetCtx& ctx,
                               const SurfaceNumbers& surface,
                               const std::vector<KClassNumbers>& classes,
                               const std::vector<Decomposition>& decomps, long trunc) {
    spec.validate();
    const long N = spec.N;
    const std::size_t ell = spec.family == Family::KTheory ? spec.ranks.size() : 1;
    if (classes.size() != ell)
        throw HypothesisViolation("assemble_invariant: class arity mismatch");
    if (spec.family == Family::KTheory)
        for (std::size_t s = 0; s < ell; ++s)
            if (spec.ranks[s] != classes[s].rank)
                throw HypothesisViolation("assemble_invariant: spec ranks must match classes");
    if (decomps.empty())
        throw HypothesisViolation("assemble_invariant: no decompositions");

    long betaK = 0;
    for (std::size_t d = 0; d < decomps.size(); ++d) {
        const auto& parts = decomps[d].parts;
        if (static_cast<long>(parts.size()) != N)
            throw HypothesisViolation("assemble_invariant: decomposition needs N parts");
        long bk = 0;
        for (const auto& p : parts) {
            if (p.biC1.size() != ell)
                throw HypothesisViolation("assemble_invariant: part class arity mismatch");
            bk += p.biK;
        }
        if (d == 0)
            betaK = bk;
        else if (bk != betaK)
            throw HypothesisViolation("assemble_invariant: decompositions of different beta.K");
    }

    // Window cost estimate: the discriminant division plus root inversions
    // and negative powers; generous, corrected by the retry loop below.
    long cost = N + 2;
    for (const auto& d : decomps) {
        long c = N - 1;
        for (const auto& p : d.parts)
            c += std::abs(p.biK) * 2 * N;
        for (const auto& row : d.bibj)
            for (long v : row)
                c += std::abs(v);
        cost = std::max(cost, N + 2 + c);
    }

    for (int attempt = 0;; ++attempt) {
        try {
            const long Tpad = trunc + cost;
            UniversalBundle ub = universal_bundle(spec, ctx, Tpad);
            Series<Jet> pref = ub.A.pow_int(surface.K2);
            for (std::size_t s = 0; s < ell; ++s)
                pref = pref * ub.B[s].pow_int(classes[s].c1K);

            bool first = true;
            Series<Jet> sum = Series<Jet>::zeroes(0, 2, ub.block.proto());
            for (const auto& d : decomps) {
                ExponentPattern pat;
                Rat swprod(1);
                for (const auto& p : d.parts) {
                    pat.slots.push_back({p.biK, p.biC1});
                    swprod *= p.sw;
                }
                pat.bibj = d.bibj.empty()
                               ? std::vector<std::vector<long>>(
                                     static_cast<std::size_t>(N),
                                     std::vector<long>(static_cast<std::size_t>(N), 0))
                               : d.bibj;

                std::size_t active = 0;
                ExponentPattern::Shape shape = pat.classify(active);
                Rat count(1);
                if (shape == ExponentPattern::Shape::SingleActive) {
                    std::vector<DecompPart> inactive;
                    for (std::size_t i = 0; i < d.parts.size(); ++i)
                        if (i != active)
                            inactive.push_back(d.parts[i]);
                    count = factorial(N - 1) / mult_factorial(inactive);
                } else {
                    count = factorial(N) / mult_factorial(d.parts);
                }

                Series<Jet> term = ub.pattern_value(pat).scale(swprod * count);
                sum = first ? term : sum + term;
                first = false;
            }

            Series<Jet> out = (pref * sum).shifted(-betaK);
            if (out.trunc() < trunc)
                throw TruncationUnderflow("assemble_invariant: window shortfall");
            if (out.valuation() < -betaK)
                out = out.restricted_above(-betaK);
            return out.truncated(trunc);
        } catch (const TruncationUnderflow&) {
            if (attempt >= 4)
                throw;
            cost *= 2;
        }
    }
}

Series<Rat> assemble_wedge(const GenusSpec& spec, const SurfaceNumbers& surface,
                           const std::vector<KClassNumbers>& classes,
                           const std::vector<Decomposition>& decomps,
                           const std::vector<int>& orders, long trunc) {
    JetCtx ctx;
    if (spec.family == Family::KTheory) {
        if (orders.size() != spec.ranks.size())
            throw HypothesisViolation("assemble_wedge: order arity must match ranks");
        std::vector<std::string> vars;
        for (std::size_t s = 0; s < orders.size(); ++s)
            vars.push_back("y" + std::to_string(s));
        ctx = make_jet_context(vars, orders);
    } else if (!orders.empty()) {
        throw HypothesisViolation("assemble_wedge: this family carries no jet variables");
    }
    Series<Jet> z = assemble_invariant(spec, ctx, surface, classes, decomps, trunc);
    return y_derivative(z, orders);
}

Series<Rat> closed_form(ClosedForm name, const ClosedFormParams& p, long trunc) {
    const long T = trunc;
    Series<Rat> q = Series<Rat>::variable(T, Rat(0));
    Series<Rat> one = rone(T);
    Series<Rat> geo = geometric(T); // 1/(1-q)

    switch (name) {
    case ClosedForm::taut0:
        return one;
    case ClosedForm::taut1:
        // -rank K^2 q^2/(1-q)^2 - c1K q/(1-q)
        return (geo * geo).shifted(2).scale(Rat(-p.rank * p.K2)).truncated(T) +
               geo.shifted(1).scale(Rat(-p.c1K)).truncated(T);
    case ClosedForm::taut2:
        return closed_form(ClosedForm::taut1, p, trunc).scale(Rat(p.N));
    case ClosedForm::taut3:
        // sw_beta (-N c1K q/(1-q) + beta.c1 /(1-q))
        return (geo.shifted(1).scale(Rat(-p.N * p.c1K)).truncated(T) +
                geo.scale(Rat(p.betaC1)))
            .scale(p.sw);
    case ClosedForm::taut4: {
        // SW (-N/(1-q))^{K2} sum_i z_i^{-K2} c1K ((1-(N+1)q)/(1-q) - z_i),
        // z_i the roots of z^N = q(z-1)^N (rank-0 alpha).
        if (p.rank != 0)
            throw HypothesisViolation("taut4: recorded only for rank-0 classes");
        const long Tp = T + p.K2 + 2;
        Series<Rat> qq = Series<Rat>::variable(Tp, Rat(0));
        ZPoly<Rat> G;
        for (long j = 0; j <= p.N; ++j) {
            Series<Rat> c = qq.scale(-binomial(p.N, j) * Rat(j % 2 ? -1 : 1));
            if (j == p.N)
                c = c + Series<Rat>::constant(Rat(p.N % 2 ? -1 : 1), Tp);
            G.push_back(c);
        }
        std::vector<Rat> g0(static_cast<std::size_t>(p.N + 1), Rat(0));
        g0.back() = Rat(1);
        auto [blk, cof] = hensel_factor(G, p.N, g0);
        Series<Rat> g = (rone(Tp) - qq.scale(Rat(p.N + 1))) / (rone(Tp) - qq);
        RootExpr<Rat> e;
        e.num = {g.scale(Rat(p.c1K)), Series<Rat>::constant(Rat(-p.c1K), Tp)};
        e.zshift = p.K2;
        Series<Rat> tr = trace_eval(blk, e);
        Series<Rat> pref = geometric(Tp).scale(Rat(-p.N)).pow_int(p.K2);
        return (tr * pref).scale(p.sw).truncated(T);
    }
    case ClosedForm::ee: {
        // (1-t)^{c1K} ((1-t(r+1))/(1-t)^{r+1})^{K2} with q = t(1-t)^r.
        ZPoly<Rat> G;
        long up = std::max(p.r, 0L), dn = std::max(-p.r, 0L);
        for (long j = 0; j <= std::max(up + 1, dn); ++j) {
            Series<Rat> c = Series<Rat>::zeroes(0, T, Rat(0));
            if (j >= 1 && j - 1 <= up)
                c = c + Series<Rat>::constant(binomial(up, j - 1) * Rat((j - 1) % 2 ? -1 : 1), T);
            if (j <= dn)
                c = c - q.scale(binomial(dn, j) * Rat(j % 2 ? -1 : 1));
            G.push_back(c);
        }
        Series<Rat> t = newton_root(G, Rat(0));
        Series<Rat> omt = one - t;
        return omt.pow_int(p.c1K) *
               ((one - t.scale(Rat(p.r + 1))) * omt.pow_int(-(p.r + 1))).pow_int(p.K2);
    }
    case ClosedForm::eef:
        return (one - q).pow_int(p.c1K);
    case ClosedForm::zbarpg: {
        if (p.nu < 2)
            throw HypothesisViolation("zbarpg: recorded only for nu >= 2");
        if (T <= p.nu)
            throw TruncationUnderflow("zbarpg: trunc must exceed nu");
        Series<Rat> z = Series<Rat>::zeroes(0, T, Rat(0));
        for (long n = 0; n <= p.nu; ++n)
            z.set(n, p.chiAlpha);
        z.set(p.nu, z.coeff(p.nu) - p.chiKinvAlpha);
        return z;
    }
    case ClosedForm::egl_nonvirtual:
        return (one - q).pow_int(-p.chiO).scale(p.chiAlpha);
    case ClosedForm::rank1_chi0:
        return (one + q).pow_int(p.K2).scale(Rat(2));
    case ClosedForm::rank1_chi1:
        return (one + q).pow_int(p.K2) *
               (one - (q * (one - q) * (one + q).pow_int(-2)).truncated(T).scale(Rat(2 * p.K2)));
    }
    throw HypothesisViolation("closed_form: unknown form");
}

Series<Jet> prop_ppp_W(long chiO, long chiM, const std::array<Rat, 3>& chiMk, const Jet& y,
                       long trunc) {
    const long T = trunc;
    const Jet proto = Ring<Jet>::zero(y);
    Series<Jet> q = Series<Jet>::variable(T, proto);
    Series<Jet> one = Series<Jet>::constant(Ring<Jet>::one(y), T);
    auto chi = [&](long k) -> Rat {
        return chiMk[0] + chiMk[1] * Rat(k) + chiMk[2] * Rat(k) * Rat(k);
    };
    // chi(X, wedge_y M / wedge_{qy} M x alphaTilde): [q^k] = (-y)^k (chi(k) + y chi(k+1))
    Series<Jet> x = Series<Jet>::zeroes(0, T, proto);
    Jet my = -y;
    Jet mypow = Ring<Jet>::one(y);
    for (long k = 0; k < T; ++k) {
        x.set(k, mypow * (Ring<Jet>::one(y).scale(chi(k)) + y.scale(chi(k + 1))));
        mypow = mypow * my;
    }
    Series<Jet> w = (one + q.scale_c(y)).pow_int(chiM) * (one - q).pow_int(-chiO) * x;
    return (w * q).truncated(T);
}

long pg0_nu(const Pg0Input& in) {
    if (in.surface.chiO != 1)
        throw HypothesisViolation("pg0: requires chi(O_X) = 1");
    long d = in.beta2 - in.betaK;
    if (d % 2 != 0 || d < 0)
        throw HypothesisViolation("pg0: beta^2 - beta.K must be an even nonnegative integer");
    return d / 2;
}

Pg0Split pg0_split(const Pg0Input& in, long trunc) {
    const long nu = pg0_nu(in);
    const long T = trunc;
    if (T <= nu)
        throw TruncationUnderflow("pg0: trunc must exceed nu");
    Rat chiA = chi_hrr(in.surface, in.alpha);

    // alphaTilde = alpha(-beta); M = K - beta.
    const long r = in.alpha.rank;
    Rat ch2a = rat(in.alpha.c1sq - 2 * in.alpha.c2, 2);
    Rat ch2at = ch2a - Rat(in.c1aBeta) + Rat(r) * rat(in.beta2, 2);
    Rat c1atK = Rat(in.alpha.c1K - r * in.betaK);
    Rat chiAt = Rat(r) + ch2at - c1atK / 2;
    long M2 = in.surface.K2 - 2 * in.betaK + in.beta2;
    long MK = in.surface.K2 - in.betaK;
    // c1(alphaTilde).M = (c1a - r beta).(K - beta)
    Rat c1atM = Rat(in.alpha.c1K) - Rat(in.c1aBeta) - Rat(r) * Rat(in.betaK) +
                Rat(r) * Rat(in.beta2);

    // chi(M^k x alphaTilde) as a quadratic in k.
    std::array<Rat, 3> chiMk = {Rat(r) + ch2at - c1atK / 2,
                                c1atM - Rat(r) * rat(MK, 2),
                                Rat(r) * rat(M2, 2)};

    Pg0Split out{Series<Rat>::zeroes(0, T, Rat(0)), Series<Rat>::zeroes(0, T, Rat(0)),
                 Series<Rat>::zeroes(0, T, Rat(0))};
    for (long n = 0; n <= nu; ++n)
        out.Z1.set(n, chiA);
    out.Z2.set(nu, -chiAt * Rat(nu + 1));

    // Z3 = [s^nu] W(y = s - 1).
    JetCtx ctx = make_jet_context({"s"}, {static_cast<int>(nu)});
    Jet y = Jet::variable(ctx, 0) - Jet(ctx, Rat(1));
    Series<Jet> w = prop_ppp_W(1, nu + 1, chiMk, y, T);
    std::vector<int> ord = {static_cast<int>(nu)};
    out.Z3 = y_derivative(w, ord).truncated(T).with_valuation(0);
    return out;
}

Series<Rat> pg0_series(const Pg0Input& in, long trunc) {
    Pg0Split s = pg0_split(in, trunc);
    return s.Z1 + s.Z2 + s.Z3;
}

SvReport sv_check(long N, long r, const SurfaceNumbers& surface, const KClassNumbers& cls,
                  const std::vector<Decomposition>& decomps, long trunc) {
    Series<Rat> v =
        assemble_wedge(GenusSpec::verlinde(N, r), surface, {cls}, decomps, {}, trunc);
    Series<Rat> s =
        assemble_wedge(GenusSpec::segre(N, r), surface, {cls}, decomps, {}, trunc);
    SvReport rep{false, 0, Rat(0), Rat(0), v, rescale_arg(s, Rat(N % 2 ? -1 : 1))};
    long where = 0;
    if (first_disagreement(rep.verlinde, rep.segre_rescaled, where)) {
        rep.firstDiscrepancy = where;
        rep.lhs = rep.verlinde.coeff(where);
        rep.rhs = rep.segre_rescaled.coeff(where);
    } else {
        rep.equal = true;
    }
    return rep;
}

namespace {

// Degree-n block of z^n (1-z)^m - q along with the series M = norm(F)/disc,
// Nser = p(1)^m for the symmetry comparison.
struct SymBlock {
    MonicSeriesPoly<Rat> p;
    Series<Rat> M, Nser;
};

SymBlock sym_block(long n, long m, long T) {
    Series<Rat> q = Series<Rat>::variable(T, Rat(0));
    ZPoly<Rat> G;
    for (long j = 0; j <= n + m; ++j) {
        Series<Rat> c = Series<Rat>::zeroes(0, T, Rat(0));
        if (j >= n)
            c = c + Series<Rat>::constant(binomial(m, j - n) * Rat((j - n) % 2 ? -1 : 1), T);
        if (j == 0)
            c = c - q;
        G.push_back(c);
    }
    std::vector<Rat> g0(static_cast<std::size_t>(n + 1), Rat(0));
    g0.back() = Rat(1);
    auto [p, h] = hensel_factor(G, n, g0);

    Series<Rat> disc = norm_eval(p, RootExpr<Rat>::poly(p.z_derivative()));
    // F(z) = z^{n-1} (n - (n+m) z) / (1-z)^{m+1}
    RootExpr<Rat> F;
    F.num.assign(static_cast<std::size_t>(n - 1), Series<Rat>::zeroes(0, T, Rat(0)));
    F.num.push_back(Series<Rat>::constant(Rat(n), T));
    F.num.push_back(Series<Rat>::constant(Rat(-(n + m)), T));
    for (long j = 0; j <= m + 1; ++j)
        F.den.push_back(Series<Rat>::constant(binomial(m + 1, j) * Rat(j % 2 ? -1 : 1), T));
    SymBlock out{p, norm_eval(p, F) / disc, p.eval_const(Rat(1)).pow_int(m)};
    return out;
}

} // namespace

SymmetryResult symmetry_series(long N, long r, long mu, long K2, long trunc) {
    if (N < 1 || r < 1)
        throw HypothesisViolation("symmetry_series: N, r >= 1");
    const long T = trunc + N + r + 2;
    SymBlock a = sym_block(N, r, T);
    SymBlock b = sym_block(r, N, T);
    Series<Rat> pair = resultant_pair(a.p, b.p, Coupling::affine(Rat(1), Rat(-1), Rat(-1)));
    SymmetryResult out{a.M.truncated(trunc),
                       a.Nser.truncated(trunc),
                       b.M.truncated(trunc),
                       b.Nser.truncated(trunc),
                       pair.truncated(trunc),
                       (a.M.pow_int(K2) * a.Nser.pow_int(mu)).truncated(trunc),
                       (b.M.pow_int(K2) * b.Nser.pow_int(mu)).truncated(trunc),
                       false};
    out.equal = agree(out.lhs, out.rhs);
    return out;
}

Rank1Data rank1_data(long K2, const JetCtx& ctx, long trunc) {
    const long T = trunc;
    const Jet proto(ctx, Rat(0));
    const Jet one(ctx, Rat(1));
    Jet t = Jet::variable(ctx, 0);
    Series<Jet> q = Series<Jet>::variable(T, proto);
    Series<Jet> sone = Series<Jet>::constant(one, T);

    // u = -q(1-u)(t + (1-t)u): coefficients qt, 1 + q(1-2t), -q(1-t).
    ZPoly<Jet> Gu = {q.scale_c(t), sone + q.scale_c(one - t.scale(Rat(2))),
                     -q.scale_c(one - t)};
    // v(1-t) = -q(1-v)(v-t): coefficients -qt, (1-t) + q(1+t), -q.
    ZPoly<Jet> Gv = {-q.scale_c(t), Series<Jet>::constant(one - t, T) + q.scale_c(one + t), -q};

    Rank1Data out;
    out.u = newton_root(Gu, proto);
    out.v = newton_root(Gv, proto);

    // Eplus = ((t + (1-t)u^2)/(t + (1-t)u))^{K2}; every jet coefficient is
    // divisible by t, so divide it out before the series division.
    auto tshift = [&](const Series<Jet>& s) {
        Series<Jet> o = Series<Jet>::zeroes(s.valuation(), s.trunc(), proto);
        for (long n = s.valuation(); n < s.trunc(); ++n)
            o.set(n, s.coeff(n).shift_var_down(0, 1));
        return o;
    };
    Series<Jet> st = Series<Jet>::constant(t, T);
    Series<Jet> somt = Series<Jet>::constant(one - t, T);
    Series<Jet> up = (st + somt * out.u * out.u).truncated(T).with_valuation(0);
    Series<Jet> dn = (st + somt * out.u).truncated(T).with_valuation(0);
    out.Eplus = (tshift(up) / tshift(dn)).pow_int(K2);
    // Eminus = ((t - v^2)/(t - v))^{K2}
    Series<Jet> upm = (st - out.v * out.v).truncated(T).with_valuation(0);
    Series<Jet> dnm = (st - out.v).truncated(T).with_valuation(0);
    out.Eminus = (tshift(upm) / tshift(dnm)).pow_int(K2);
    return out;
}

Series<Rat> rank1_series(long chi, long K2, long trunc) {
    if (chi != 0 && chi != 1)
        throw HypothesisViolation("rank1_series: chi must be 0 or 1");
    JetCtx ctx = make_jet_context({"t"}, {3});
    Rank1Data d = rank1_data(K2, ctx, trunc);
    if (chi == 0)
        return y_derivative(d.Eplus, {0}) + y_derivative(d.Eminus, {0});
    // [ Eplus - (1-t) Eminus ] / t at t = 0
    return y_derivative(d.Eplus, {1}) - y_derivative(d.Eminus, {1}) +
           y_derivative(d.Eminus, {0});
}

} // namespace quot
