#include "quot/series.hpp"

namespace quot {

Series<Rat> extract_monomial(const Series<Jet>& a, const std::vector<int>& exps) {
    Series<Rat> out =
        Series<Rat>::zeroes(a.valuation(), a.trunc(), Rat(0), a.var());
    for (long n = a.valuation(); n < a.trunc(); ++n)
        out.set(n, a.coeff(n).coeff(exps));
    return out;
}

Series<Jet> lift_to_jets(const Series<Rat>& a, const JetCtx& ctx) {
    Series<Jet> out =
        Series<Jet>::zeroes(a.valuation(), a.trunc(), Jet(ctx, Rat(0)), a.var());
    for (long n = a.valuation(); n < a.trunc(); ++n)
        out.set(n, Jet(ctx, a.coeff(n)));
    return out;
}

Series<Rat> eval_jets(const Series<Jet>& a, const std::vector<Rat>& values) {
    Series<Rat> out =
        Series<Rat>::zeroes(a.valuation(), a.trunc(), Rat(0), a.var());
    for (long n = a.valuation(); n < a.trunc(); ++n)
        out.set(n, a.coeff(n).eval(values));
    return out;
}

} // namespace quot
