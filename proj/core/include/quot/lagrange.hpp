#pragma once

#include <vector>

#include "quot/series.hpp"

namespace quot {

// Solve q = x/phi(x) for x(q) with x(0) = 0, by Newton iteration on
// F(x) = x - q*phi(x). phi must have a unit constant term; the output carries
// phi's trunc.
template <class C>
Series<C> reversion(const Series<C>& phi) {
    if (phi.valuation() > 0 || !Ring<C>::is_unit(phi.coeff(0)))
        throw DivisionByNonUnit("reversion: phi(0) must be a unit");
    long T = phi.trunc();
    if (T < 2)
        throw TruncationUnderflow("reversion needs trunc >= 2");
    Series<C> q = Series<C>::variable(T, phi.proto(), "q");
    Series<C> x = q.scale_c(phi.coeff(0));
    long correct = 1;
    while (correct < T - 1) {
        Series<C> fx = compose(phi, x);
        Series<C> dfx = compose(derivative(phi), x);
        // x is exact through q^correct, so F has order > correct; restricting
        // there keeps the quotient accurate on the full window despite the one
        // order lost to the derivative in J.
        Series<C> F = (x - q * fx).restricted_above(correct + 1);
        Series<C> J = Series<C>::constant(Ring<C>::one(phi.proto()), T, "q") - q * dfx;
        x = (x - F / J).truncated(T).with_valuation(0);
        correct *= 2;
    }
    return x.restricted_above(1);
}

// Multivariable Lagrange-Buermann: phis[j] is phi_j as a series in x_j, psi a
// truncated polynomial (Jet) in the x_j over a context with one variable per
// phi. Returns (psi/K)(x_1(q),...,x_l(q)) with
// K = prod_j (1 - x_j d/dx_j log phi_j).
Series<Rat> lagrange_burmann_multi(const std::vector<Series<Rat>>& phis, const Jet& psi);

// Brute-force counterpart: sum over m of q^{sum m_j} [x^m] (prod phi_j^{m_j}) * psi,
// each m_j up to trunc-1. Exponential in l; test-scale only.
Series<Rat> lagrange_burmann_multi_bruteforce(const std::vector<Series<Rat>>& phis,
                                              const Jet& psi, long trunc);

} // namespace quot
