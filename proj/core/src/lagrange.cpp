#include "quot/lagrange.hpp"

namespace quot {

namespace {

// psi's terms rebuilt over a fresh context with the same variable order.
Jet relift(const Jet& psi, const JetCtx& ctx) {
    Jet out(ctx, Rat(0));
    for (const auto& [e, v] : psi.terms()) {
        Jet term(ctx, v);
        for (std::size_t j = 0; j < e.size(); ++j)
            term = term * Jet::variable(ctx, j).pow(e[j]);
        out += term;
    }
    return out;
}

} // namespace

Series<Rat> lagrange_burmann_multi(const std::vector<Series<Rat>>& phis, const Jet& psi) {
    const std::size_t l = phis.size();
    if (l == 0)
        throw Error("lagrange_burmann_multi: no phis");
    if (psi.ctx() && psi.ctx()->vars.size() != l)
        throw Error("lagrange_burmann_multi: psi arity mismatch");
    long T = phis[0].trunc();
    for (const auto& p : phis)
        T = std::min(T, p.trunc());
    const long Tout = T - 1; // one order lost to d/dx in K

    std::vector<Series<Rat>> xq;
    xq.reserve(l);
    for (const auto& p : phis)
        xq.push_back(reversion(p.truncated(T)));

    Series<Rat> K = Series<Rat>::constant(Rat(1), Tout, "q");
    for (std::size_t j = 0; j < l; ++j) {
        const Series<Rat>& phi = phis[j];
        Series<Rat> x = Series<Rat>::variable(T, Rat(0), phi.var());
        Series<Rat> kj =
            Series<Rat>::constant(Rat(1), T - 1, phi.var()) - (x * derivative(phi)) / phi;
        K = K * compose(kj, xq[j]).truncated(Tout);
    }

    Series<Rat> num = Series<Rat>::zeroes(0, Tout, Rat(0), "q");
    for (const auto& [e, v] : psi.terms()) {
        Series<Rat> term = Series<Rat>::constant(v, Tout, "q");
        for (std::size_t j = 0; j < e.size(); ++j)
            term = term * xq[j].pow_int(e[j]).truncated(Tout).with_valuation(0);
        num = num + term.truncated(Tout).with_valuation(0);
    }
    if (psi.ctx() == nullptr) // constant psi
        num = Series<Rat>::constant(psi.constant_term(), Tout, "q");
    return num / K;
}

Series<Rat> lagrange_burmann_multi_bruteforce(const std::vector<Series<Rat>>& phis,
                                              const Jet& psi, long trunc) {
    const std::size_t l = phis.size();
    std::vector<std::string> vars;
    std::vector<int> caps;
    for (std::size_t j = 0; j < l; ++j) {
        vars.push_back("x" + std::to_string(j));
        caps.push_back(static_cast<int>(trunc));
    }
    JetCtx ctx = make_jet_context(vars, caps);

    std::vector<Jet> phiJ;
    for (std::size_t j = 0; j < l; ++j) {
        const auto& p = phis[j];
        Jet pj(ctx, Rat(0));
        long hi = std::min<long>(p.trunc(), trunc + 1);
        for (long n = std::max(0L, p.valuation()); n < hi; ++n)
            pj += Jet::variable(ctx, j).pow(n).scale(p.coeff(n));
        phiJ.push_back(pj);
    }
    Jet psiJ = relift(psi, ctx);

    Series<Rat> out = Series<Rat>::zeroes(0, trunc, Rat(0), "q");
    std::vector<long> m(l, 0);
    while (true) {
        long total = 0;
        for (long mj : m)
            total += mj;
        if (total < trunc) {
            Jet prod = psiJ;
            for (std::size_t j = 0; j < l; ++j)
                prod = prod * phiJ[j].pow(m[j]);
            std::vector<int> key(l);
            for (std::size_t j = 0; j < l; ++j)
                key[j] = static_cast<int>(m[j]);
            Rat c = prod.coeff(key);
            out.set(total, out.coeff(total) + c);
        }
        // next m in the box [0, trunc)^l
        std::size_t j = 0;
        for (; j < l; ++j) {
            if (++m[j] < trunc)
                break;
            m[j] = 0;
        }
        if (j == l)
            break;
    }
    return out;
}

} // namespace quot
