#include "quot/oracle.hpp"

#include <random>

namespace quot {

namespace {

void enumerate_rec(long n, long maxpart, std::vector<long>& acc,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (long p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(long n) {
    std::vector<Partition> out;
    std::vector<long> acc;
    enumerate_rec(n, n == 0 ? 1 : n, acc, out);
    // descending recursion emits reverse-lexicographic order; flip it
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<BoxData> boxes(const Partition& p) {
    std::vector<BoxData> out;
    auto col_height = [&](long j) {
        long h = 0;
        while (h < static_cast<long>(p.parts.size()) &&
               p.parts[static_cast<std::size_t>(h)] > j)
            ++h;
        return h;
    };
    for (long i = 0; i < static_cast<long>(p.parts.size()); ++i)
        for (long j = 0; j < p.parts[static_cast<std::size_t>(i)]; ++j)
            out.push_back(BoxData{i, j, p.parts[static_cast<std::size_t>(i)] - j - 1,
                                  col_height(j) - i - 1});
    return out;
}

std::vector<std::pair<long, long>> tangent_character(const Partition& p) {
    std::vector<std::pair<long, long>> out;
    for (const BoxData& b : boxes(p)) {
        out.emplace_back(-b.leg, b.arm + 1);
        out.emplace_back(b.leg + 1, -b.arm);
    }
    return out;
}

EvalPoint seeded_eval_point(unsigned long long seed, int attempt) {
    std::mt19937_64 rng(seed * 6364136223846793005ULL + static_cast<unsigned>(attempt) + 1);
    std::uniform_int_distribution<long> num(2, 40), den(1, 7);
    auto draw = [&]() -> Rat { return rat(num(rng), den(rng)); };
    EvalPoint pt;
    do {
        pt.t1 = draw();
        pt.t2 = draw();
    } while (pt.t1 == pt.t2 || pt.t1 == 1 || pt.t2 == 1);
    pt.y = draw();
    pt.m = draw();
    pt.a = draw();
    pt.u = draw();
    return pt;
}

Series<Jet> f_sum(const Series<Jet>& qslot, const Rat& u, const Series<Jet>& vslot,
                  const Rat& t1, const Rat& t2, long maxn, long trunc) {
    const Jet proto = Ring<Jet>::zero(qslot.proto());
    Series<Jet> one = Series<Jet>::constant(Ring<Jet>::one(proto), trunc);
    Series<Jet> sum = Series<Jet>::zeroes(0, trunc, proto);
    Series<Jet> qpow = one;
    for (long n = 0; n <= maxn; ++n) {
        if (n > 0)
            qpow = (qpow * qslot).truncated(trunc).with_valuation(0);
        for (const Partition& lam : enumerate_partitions(n)) {
            Rat wedge(1);
            for (auto [i, j] : tangent_character(lam))
                wedge *= Rat(1) - rat_pow(t1, -i) * rat_pow(t2, -j);
            if (sgn(wedge) == 0)
                throw PoleAtEvalPoint("tangent weight equals 1 at the eval point");
            Series<Jet> term = qpow.scale(Rat(1) / wedge);
            for (const BoxData& b : boxes(lam)) {
                Rat w = rat_pow(t1, b.b1) * rat_pow(t2, b.b2);
                Series<Jet> denom =
                    (vslot - Series<Jet>::constant(Jet(w), trunc)).truncated(trunc);
                term = ((term / denom).scale(Rat(1) - u * w)).truncated(trunc)
                           .with_valuation(0);
            }
            sum = sum + term;
        }
    }
    return sum;
}

Series<Jet> f_vertex(long qorder, long vorder, const Rat& t1, const Rat& t2, const Rat& u) {
    JetCtx ctx = make_jet_context({"v"}, {static_cast<int>(vorder)});
    Jet proto = Jet(ctx, Rat(0));
    long T = std::max(qorder + 1, 2L);
    Series<Jet> q = Series<Jet>::variable(T, proto);
    Series<Jet> v = Series<Jet>::constant(Jet::variable(ctx, 0), T);
    return f_sum(q, u, v, t1, t2, qorder, T).truncated(qorder + 1);
}

bool f_symmetry_check(long qorder, long vorder, const EvalPoint& pt) {
    JetCtx ctx = make_jet_context({"v"}, {static_cast<int>(vorder)});
    Jet proto = Jet(ctx, Rat(0));
    long T = qorder + 1;
    Series<Jet> q = Series<Jet>::variable(T, proto);
    Series<Jet> v = Series<Jet>::constant(Jet::variable(ctx, 0), T);
    Series<Jet> zero = Series<Jet>::constant(proto, T);

    Series<Jet> lhs = f_sum(q, pt.u, v, pt.t1, pt.t2, qorder, T) /
                      f_sum(q, pt.u, zero, pt.t1, pt.t2, qorder, T);
    Series<Jet> rhs = f_sum(v, pt.u, q, pt.t1, pt.t2, vorder, T) /
                      f_sum(v, pt.u, zero, pt.t1, pt.t2, vorder, T);
    return agree(lhs.truncated(T), rhs.truncated(T));
}

WStarReport w_star_check(const EvalPoint& pt, long trunc) {
    if (sgn(pt.y) == 0 || sgn(pt.m) == 0)
        throw PoleAtEvalPoint("w_star_check: y*m must be nonzero");
    Rat ym = pt.y * pt.m;
    JetCtx ctx = make_jet_context({"z"}, {2});
    Jet proto = Jet(ctx, Rat(0));
    long T = trunc;
    Series<Jet> qslot =
        Series<Jet>::variable(T, proto).scale(-ym); // -q y m
    Series<Jet> vslot = Series<Jet>::constant(Jet::variable(ctx, 0).scale(pt.a), T);
    Series<Jet> F = f_sum(qslot, Rat(-1) / ym, vslot, pt.t1, pt.t2, T - 1, T);

    WStarReport rep;
    Series<Rat> F0 = y_derivative(F, {0});
    Series<Rat> F1 = y_derivative(F, {1});
    rep.lhs = (F1 / F0).truncated(T).with_valuation(0);

    Rat edge = (Rat(1) - Rat(1) / pt.t1) * (Rat(1) - Rat(1) / pt.t2);
    if (sgn(edge) == 0)
        throw PoleAtEvalPoint("w_star_check: degenerate torus weights");
    Series<Rat> q = Series<Rat>::variable(T, Rat(0));
    Series<Rat> one = Series<Rat>::constant(Rat(1), T);
    rep.rhs = (q.scale(pt.a / edge) * (one.scale(Rat(1) + ym) / (one + q.scale(ym))))
                  .truncated(T)
                  .with_valuation(0);
    rep.equal = agree(rep.lhs, rep.rhs);
    return rep;
}

} // namespace quot
