#include "quot/universal.hpp"

#include <algorithm>

namespace quot {

namespace {

using SJ = Series<Jet>;
using ZP = ZPoly<Jet>;

Jet jet_const(const JetCtx& ctx, Rat v) { return ctx ? Jet(ctx, std::move(v)) : Jet(std::move(v)); }

Jet jpow(const Jet& x, long k) { return k < 0 ? x.inverse().pow(-k) : x.pow(k); }

SJ sconst(const Jet& v, long T) { return SJ::constant(v, T); }

ZP zp_add(const ZP& a, const ZP& b) {
    ZP out = a.size() >= b.size() ? a : b;
    const ZP& rest = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < rest.size(); ++i)
        out[i] = out[i] + rest[i];
    return out;
}

ZP zp_neg(ZP a) {
    for (auto& s : a)
        s = -s;
    return a;
}

ZP zp_mul(const ZP& a, const ZP& b) { return RootExpr<Jet>::zp_mul(a, b); }

ZP zp_pow(const ZP& base, long k, const Jet& proto, long T) {
    ZP acc = {SJ::constant(Ring<Jet>::one(proto), T)};
    for (long i = 0; i < k; ++i)
        acc = zp_mul(acc, base);
    return acc;
}

// z^k * a
ZP zp_shift_up(ZP a, long k, const Jet& proto, long T) {
    a.insert(a.begin(), static_cast<std::size_t>(k), SJ::zeroes(0, T, proto));
    return a;
}

ZP one_minus_z_pow(long k, const Jet& proto, long T) {
    ZP out;
    for (long j = 0; j <= k; ++j)
        out.push_back(sconst(Ring<Jet>::one(proto).scale(binomial(k, j) * Rat(j % 2 ? -1 : 1)), T));
    return out;
}

ZP zp_scale_series(ZP a, const SJ& s) {
    for (auto& c : a)
        c = (c * s).truncated(a[0].trunc()).with_valuation(0);
    return a;
}

} // namespace

void GenusSpec::validate() const {
    if (N < 1)
        throw HypothesisViolation("GenusSpec: N must be >= 1");
    switch (family) {
    case Family::KTheory:
        break;
    case Family::Verlinde:
    case Family::Segre:
        if (ranks.size() != 1)
            throw HypothesisViolation("GenusSpec: Verlinde/Segre carry exactly one rank");
        break;
    case Family::Cobordism:
        if (!genus_g)
            throw HypothesisViolation("GenusSpec: Cobordism needs a genus series");
        break;
    case Family::RawPair:
        if (!genus_g || genus_f.empty())
            throw HypothesisViolation("GenusSpec: RawPair needs both series payloads");
        break;
    }
}

ExponentPattern::Shape ExponentPattern::classify(std::size_t& active) const {
    const std::size_t n = slots.size();
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!slots[i].is_zero()) {
            ++nonzero;
            last = i;
        }
    auto pair_entries = [&](bool& all_zero, bool& all_equal, long& value) {
        all_zero = true;
        all_equal = true;
        bool have = false;
        for (std::size_t i = 0; i < bibj.size(); ++i)
            for (std::size_t j = 0; j < bibj[i].size(); ++j) {
                if (i == j)
                    continue;
                long v = bibj[i][j];
                if (v != 0)
                    all_zero = false;
                if (!have) {
                    value = v;
                    have = true;
                } else if (v != value) {
                    all_equal = false;
                }
            }
        if (!have)
            value = 0;
    };
    bool pz, pe;
    long pv;
    pair_entries(pz, pe, pv);
    if (nonzero == 0) {
        if (!pz)
            throw UnsupportedPattern("nonzero pair exponents with all-zero slots");
        return Shape::AllZero;
    }
    if (nonzero == 1) {
        if (!pz)
            throw UnsupportedPattern("nonzero pair exponents with a single active slot");
        active = last;
        return Shape::SingleActive;
    }
    if (nonzero == n) {
        for (std::size_t i = 1; i < n; ++i)
            if (!(slots[i] == slots[0]))
                throw UnsupportedPattern("distinct nonzero slots");
        if (!pe)
            throw UnsupportedPattern("unequal pair exponents in an all-equal pattern");
        return Shape::AllEqual;
    }
    throw UnsupportedPattern("mixed active/inactive slots");
}

ExponentPattern ExponentPattern::zero(long N, long ell) {
    ExponentPattern p;
    p.slots.assign(static_cast<std::size_t>(N),
                   SlotExponents{0, std::vector<long>(static_cast<std::size_t>(ell), 0)});
    p.bibj.assign(static_cast<std::size_t>(N),
                  std::vector<long>(static_cast<std::size_t>(N), 0));
    return p;
}

ExponentPattern ExponentPattern::single(long N, long ell, SlotExponents part) {
    ExponentPattern p = zero(N, ell);
    p.slots[0] = std::move(part);
    return p;
}

ExponentPattern ExponentPattern::equal(long N, SlotExponents part, long pair_exponent) {
    ExponentPattern p = zero(N, static_cast<long>(part.biC1.size()));
    for (auto& s : p.slots)
        s = part;
    for (std::size_t i = 0; i < p.bibj.size(); ++i)
        for (std::size_t j = 0; j < p.bibj.size(); ++j)
            if (i != j)
                p.bibj[i][j] = pair_exponent;
    return p;
}

ZPoly<Jet> change_poly(const GenusSpec& spec, const JetCtx& ctx, long trunc) {
    spec.validate();
    const long N = spec.N;
    const long T = trunc;
    const Jet proto = jet_const(ctx, Rat(0));
    SJ q = SJ::variable(T, proto);

    switch (spec.family) {
    case Family::KTheory: {
        const long ell = spec.ell();
        if (!ctx || static_cast<long>(ctx->vars.size()) != ell)
            throw HypothesisViolation("change_poly: context arity must match ranks");
        // V_s(z) = 1 + y_s (1 - z)
        std::vector<ZP> V;
        for (long s = 0; s < ell; ++s) {
            Jet y = Jet::variable(ctx, static_cast<std::size_t>(s));
            V.push_back({sconst(jet_const(ctx, Rat(1)) + y, T), sconst(-y, T)});
        }
        ZP neg = {SJ::constant(Ring<Jet>::one(proto), T)};
        ZP pos = one_minus_z_pow(N, proto, T);
        for (long s = 0; s < ell; ++s) {
            long r = spec.ranks[static_cast<std::size_t>(s)];
            if (r > 0)
                pos = zp_mul(pos, zp_pow(V[static_cast<std::size_t>(s)], r, proto, T));
            else if (r < 0)
                neg = zp_mul(neg, zp_pow(V[static_cast<std::size_t>(s)], -r, proto, T));
        }
        // (-z)^N * prod_{r<0} V^{|r|}  =  q * (1-z)^N * prod_{r>0} V^{r}
        ZP lhs = zp_shift_up(neg, N, proto, T);
        if (N % 2)
            lhs = zp_neg(lhs);
        return zp_add(lhs, zp_neg(zp_scale_series(pos, q)));
    }
    case Family::Verlinde:
    case Family::Segre: {
        const long r = spec.ranks[0];
        SJ qq = spec.family == Family::Segre && (N % 2) ? -q : q;
        // z^N (1-z)^{max(r,0)} = q (1-z)^{max(-r,0)}   (Segre: q -> (-1)^N q)
        ZP lhs = zp_shift_up(one_minus_z_pow(std::max(r, 0L), proto, T), N, proto, T);
        ZP rhs = zp_scale_series(one_minus_z_pow(std::max(-r, 0L), proto, T), qq);
        return zp_add(lhs, zp_neg(rhs));
    }
    default:
        throw UnsupportedGenus("change_poly: family has no root relation");
    }
}

UniversalBundle universal_bundle(const GenusSpec& spec, const JetCtx& ctx, long trunc) {
    spec.validate();
    if (spec.family == Family::Cobordism || spec.family == Family::RawPair)
        throw UnsupportedGenus("universal_bundle: use cobordism_series for this family");
    const long N = spec.N;
    const long T = trunc;
    const Jet proto = jet_const(ctx, Rat(0));
    const Jet jone = jet_const(ctx, Rat(1));
    const SJ one = SJ::constant(jone, T);

    ZP G = change_poly(spec, ctx, trunc);
    std::vector<Jet> g0(static_cast<std::size_t>(N + 1), proto);
    g0.back() = jone;
    auto [p, h] = hensel_factor(G, N, g0);

    UniversalBundle ub;
    ub.spec = spec;
    ub.ctx = ctx;
    ub.block = p;
    ub.cofactor = h;
    ub.discprod = norm_eval(p, RootExpr<Jet>::poly(p.z_derivative()));
    ub.block_at_one = p.eval_const(jone);
    ZP dp = p.z_derivative();
    ZP dp2 = zp_mul(dp, dp);

    if (spec.family == Family::KTheory) {
        const long ell = spec.ell();
        std::vector<ZP> V;
        std::vector<Jet> yv;
        for (long s = 0; s < ell; ++s) {
            Jet y = Jet::variable(ctx, static_cast<std::size_t>(s));
            yv.push_back(y);
            V.push_back({sconst(jone + y, T), sconst(-y, T)});
        }
        // E(z) = N prod_s V_s + sum_s r_s y_s z(1-z) prod_{t != s} V_t
        ZP z_one_minus_z = {SJ::zeroes(0, T, proto), one, -one};
        ZP E = {SJ::constant(Ring<Jet>::one(proto).scale(Rat(N)), T)};
        for (long s = 0; s < ell; ++s)
            E = zp_mul(E, V[static_cast<std::size_t>(s)]);
        for (long s = 0; s < ell; ++s) {
            long r = spec.ranks[static_cast<std::size_t>(s)];
            if (r == 0)
                continue;
            ZP term = zp_scale_series(z_one_minus_z,
                                      sconst(yv[static_cast<std::size_t>(s)].scale(Rat(r)), T));
            for (long t = 0; t < ell; ++t)
                if (t != s)
                    term = zp_mul(term, V[static_cast<std::size_t>(t)]);
            E = zp_add(E, term);
        }

        // A = prod_s (1+y_s)^{-r_s N} * norm(z^{N-1}(1-z)^{N-1} E prod V_s^{r_s-1}) / disc
        RootExpr<Jet> FA;
        FA.num = zp_mul(zp_shift_up(one_minus_z_pow(N - 1, proto, T), N - 1, proto, T), E);
        Jet ascale = jone;
        for (long s = 0; s < ell; ++s) {
            long r = spec.ranks[static_cast<std::size_t>(s)];
            if (r >= 1)
                FA.num = zp_mul(FA.num, zp_pow(V[static_cast<std::size_t>(s)], r - 1, proto, T));
            else
                FA.den = zp_mul(FA.den.empty() ? ZP{one} : FA.den,
                                zp_pow(V[static_cast<std::size_t>(s)], 1 - r, proto, T));
            ascale = ascale * jpow(jone + yv[static_cast<std::size_t>(s)], -r * N);
        }
        ub.A = sconst(ascale, T) * norm_eval(p, FA) / ub.discprod;

        for (long s = 0; s < ell; ++s)
            ub.B.push_back(sconst(jpow(jone + yv[static_cast<std::size_t>(s)], N), T) /
                           norm_eval(p, RootExpr<Jet>::poly(V[static_cast<std::size_t>(s)])));

        ub.u_scalar = one.scale(Rat(N % 2 ? 1 : -1)) / ub.block_at_one;
        ub.u_expr.zshift = N - 1;
        ub.u_expr.num = zp_mul(dp2, one_minus_z_pow(std::max(0L, 2 - N), proto, T));
        ub.u_expr.den = zp_mul(E, one_minus_z_pow(std::max(0L, N - 2), proto, T));
        for (long s = 0; s < ell; ++s) {
            long r = spec.ranks[static_cast<std::size_t>(s)];
            if (r <= 0)
                ub.u_expr.num =
                    zp_mul(ub.u_expr.num, zp_pow(V[static_cast<std::size_t>(s)], 1 - r, proto, T));
            else if (r >= 2)
                ub.u_expr.den =
                    zp_mul(ub.u_expr.den, zp_pow(V[static_cast<std::size_t>(s)], r - 1, proto, T));
            ub.v_expr.push_back(RootExpr<Jet>::poly(V[static_cast<std::size_t>(s)]));
        }
        ub.w_pair_prod = ub.block_at_one.pow_int(N - 1) / ub.discprod;
        return ub;
    }

    // Verlinde / Segre: single rank, no jet variables required.
    const long r = spec.ranks[0];
    const bool segre = spec.family == Family::Segre;
    // E(z) = (N+r) z - N for Verlinde; Segre uses N - (N+r) z.
    ZP E = {one.scale(Rat(segre ? N : -N)), one.scale(Rat(segre ? -(N + r) : N + r))};

    RootExpr<Jet> FA;
    FA.num = zp_mul(zp_shift_up(E, N - 1, proto, T),
                    one_minus_z_pow(std::max(0L, -(r + 1)), proto, T));
    if (!segre && (N % 2))
        FA.num = zp_neg(FA.num); // fold the per-root (-1)^N
    if (r + 1 > 0)
        FA.den = one_minus_z_pow(r + 1, proto, T);
    ub.A = norm_eval(p, FA) / ub.discprod;

    ub.B = {ub.block_at_one};

    ub.u_scalar = segre ? one.scale(Rat(N % 2 ? 1 : -1)) : -(one / ub.block_at_one);
    ub.u_expr.zshift = N - 1;
    long w = segre ? r + 1 : r + 2;
    ub.u_expr.num = zp_mul(dp2, one_minus_z_pow(std::max(0L, w), proto, T));
    ub.u_expr.den = zp_mul(E, one_minus_z_pow(std::max(0L, -w), proto, T));

    RootExpr<Jet> vexpr;
    vexpr.den = {one, -one}; // 1/(1-z)
    ub.v_expr = {vexpr};

    ub.w_pair_prod = segre ? one / ub.discprod
                           : ub.block_at_one.pow_int(N - 1) / ub.discprod;
    return ub;
}

Series<Jet> UniversalBundle::sum_over_roots(const SlotExponents& e) const {
    if (e.biC1.size() != v_expr.size())
        throw HypothesisViolation("sum_over_roots: class arity mismatch");
    RootExpr<Jet> expr = u_expr.pow(e.biK);
    for (std::size_t s = 0; s < v_expr.size(); ++s)
        expr = expr * v_expr[s].pow(e.biC1[s]);
    Series<Jet> tr = trace_eval(block, expr);
    return e.biK == 0 ? tr : u_scalar.pow_int(e.biK) * tr;
}

Series<Jet> UniversalBundle::product_over_roots(const SlotExponents& e,
                                                long pair_exponent) const {
    if (e.biC1.size() != v_expr.size())
        throw HypothesisViolation("product_over_roots: class arity mismatch");
    RootExpr<Jet> expr = u_expr.pow(e.biK);
    for (std::size_t s = 0; s < v_expr.size(); ++s)
        expr = expr * v_expr[s].pow(e.biC1[s]);
    Series<Jet> out = norm_eval(block, expr);
    if (e.biK != 0)
        out = out * u_scalar.pow_int(e.biK * N());
    if (pair_exponent != 0)
        out = out * w_pair_prod.pow_int(pair_exponent);
    return out;
}

Series<Jet> UniversalBundle::pattern_value(const ExponentPattern& pattern) const {
    if (static_cast<long>(pattern.slots.size()) != N())
        throw HypothesisViolation("pattern_value: slot count must equal N");
    std::size_t active = 0;
    switch (pattern.classify(active)) {
    case ExponentPattern::Shape::AllZero:
        return Series<Jet>::constant(Ring<Jet>::one(block.proto()), block.trunc());
    case ExponentPattern::Shape::SingleActive:
        return sum_over_roots(pattern.slots[active]);
    case ExponentPattern::Shape::AllEqual: {
        long pair = pattern.bibj.size() > 1 ? pattern.bibj[0][1] : 0;
        return product_over_roots(pattern.slots[0], pair);
    }
    }
    throw UnsupportedPattern("pattern_value: unreachable");
}

Series<Rat> y_derivative(const Series<Jet>& a, const std::vector<int>& orders) {
    const JetCtx& ctx = a.proto().ctx();
    bool all_zero = true;
    for (int k : orders)
        if (k != 0)
            all_zero = false;
    if (!ctx) {
        if (!all_zero)
            throw InsufficientJetCap("y_derivative: series has no jet variables");
        return extract_monomial(a, orders);
    }
    if (orders.size() != ctx->vars.size())
        throw InsufficientJetCap("y_derivative: order arity mismatch");
    for (std::size_t s = 0; s < orders.size(); ++s)
        if (orders[s] < 0 || orders[s] > ctx->caps[s])
            throw InsufficientJetCap("y_derivative: order exceeds cap for " + ctx->vars[s]);
    return extract_monomial(a, orders);
}

} // namespace quot
