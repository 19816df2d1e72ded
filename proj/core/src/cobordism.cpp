#include "quot/cobordism.hpp"

#include "quot/lagrange.hpp"

namespace quot {

Series<Jet> p_ell(const Series<Jet>& g, const Series<Jet>& h, long ell) {
    long T = h.trunc();
    Series<Jet> lh = h.scale(Rat(ell));
    Series<Jet> P = derivative(h);
    // ell*h/g(ell*h) has valuation 1 (or is 0 for ell = 0).
    return ((lh / compose(g, lh).truncated(T)) * P).truncated(P.trunc());
}

CobordismData cobordism_series(const Series<Jet>& g, long K2, long betaK, const Rat& sw,
                               long trunc) {
    if (g.valuation() > 0 || !Ring<Jet>::is_zero(g.coeff(0) - Ring<Jet>::one(g.proto())))
        throw BadConstantTerm("cobordism: genus must have constant term 1");
    // P loses one order to the derivative, A one more to the q-shift.
    long T = trunc + std::abs(betaK) + 2;
    Series<Jet> gT = g.truncated(T);
    if (gT.trunc() < T)
        throw TruncationUnderflow("cobordism: genus series is too short");

    CobordismData out;
    out.h = reversion(gT);
    out.P = derivative(out.h);
    Series<Jet> Pm1 = p_ell(gT, out.h, -1);
    Series<Jet> A = Pm1.shifted(-1).scale(Rat(-1)) / out.P.pow_int(2);
    out.Z = A.pow_int(K2 - betaK).shifted(-betaK).scale(sw).truncated(trunc);
    out.A = A.truncated(trunc);
    return out;
}

Series<Jet> pontryagin_A(const Jet& y, long trunc) {
    const Jet one = Ring<Jet>::one(y);
    Series<Jet> q = Series<Jet>::variable(trunc, Ring<Jet>::zero(y));
    Series<Jet> c1 = Series<Jet>::constant(one, trunc);
    Series<Jet> inner = c1 - (q * q).truncated(trunc).scale_c(y.scale(Rat(4)));
    Series<Jet> s = series_exp(series_log(inner).scale(Rat(1, 2)));
    return ((c1 + s) * s).truncated(trunc).scale(Rat(1, 2));
}

} // namespace quot
