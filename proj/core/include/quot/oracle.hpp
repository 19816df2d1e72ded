#pragma once

#include <utility>
#include <vector>

#include "quot/lagrange.hpp"
#include "quot/universal.hpp"

namespace quot {

struct Partition {
    std::vector<long> parts; // weakly decreasing, positive
    long size() const {
        long n = 0;
        for (long p : parts)
            n += p;
        return n;
    }
};

// All partitions of n in lexicographic order of the part lists.
std::vector<Partition> enumerate_partitions(long n);

struct BoxData {
    long b1, b2;   // row, column (0-based)
    long arm, leg; // boxes to the right / below
};

std::vector<BoxData> boxes(const Partition& p);

// Tangent-space character at the monomial ideal of p: the 2|p| exponent pairs
// (i, j) of t1^i t2^j, one per summand t1^{-leg} t2^{arm+1} and
// t1^{leg+1} t2^{-arm}.
std::vector<std::pair<long, long>> tangent_character(const Partition& p);

// Generic equivariant evaluation point plus the auxiliary weights.
struct EvalPoint {
    Rat t1 = Rat(7);
    Rat t2 = rat(1, 5);
    Rat y = rat(1, 3);
    Rat m = Rat(2);
    Rat a = Rat(1);
    Rat u = Rat(2);
};

// Deterministic pseudorandom points: the same (seed, attempt) always yields
// the same point. Used by the retry-on-pole policy (at most 5 attempts).
EvalPoint seeded_eval_point(unsigned long long seed, int attempt);

// The partition-sum vertex with both "q" and "v" slots given as series over a
// jet context (either may be a constant jet, a pure jet variable, or a power
// series in q):
//   sum over |lambda| <= maxn of  qslot^{|lambda|} / prod_w (1 - w^{-1})
//     * prod_{(b1,b2) in lambda} (1 - u t1^{b1} t2^{b2}) / (vslot - t1^{b1} t2^{b2}),
// where w runs over the tangent weights of lambda at (t1, t2). Throws
// PoleAtEvalPoint when a tangent weight equals 1 at the point.
Series<Jet> f_sum(const Series<Jet>& qslot, const Rat& u, const Series<Jet>& vslot,
                  const Rat& t1, const Rat& t2, long maxn, long trunc);

// The bivariate vertex to orders (qorder, vorder) inclusive: a series in q
// with jet coefficients in the formal variable v (cap vorder).
Series<Jet> f_vertex(long qorder, long vorder, const Rat& t1, const Rat& t2, const Rat& u);

// The (q, v)-symmetry of the vertex: F(q,u,v)/F(q,u,0) == F(v,u,q)/F(v,u,0)
// to bivariate orders (qorder, vorder).
bool f_symmetry_check(long qorder, long vorder, const EvalPoint& pt);

// Compares the z^1 coefficient of the normalized twisted vertex (q-slot
// -q*y*m, u = -1/(y*m), v-slot z*a with z a cap-2 jet) against the closed form
//   q a / ((1 - t1^{-1})(1 - t2^{-1})) * (1 + y m) / (1 + q y m).
struct WStarReport {
    bool equal = false;
    Series<Rat> lhs = Series<Rat>::zeroes(0, 1, Rat(0));
    Series<Rat> rhs = Series<Rat>::zeroes(0, 1, Rat(0));
};
WStarReport w_star_check(const EvalPoint& pt, long trunc);

// Reversion of q = x/phi(x) by direct coefficient extraction,
// [q^n] h = (1/n) [x^{n-1}] phi^n. No Newton iteration; validates reversion.
template <class C>
Series<C> lagrange_oracle(const Series<C>& phi, long trunc) {
    if (phi.valuation() > 0 || !Ring<C>::is_unit(phi.coeff(0)))
        throw DivisionByNonUnit("lagrange_oracle: phi(0) must be a unit");
    Series<C> h = Series<C>::zeroes(1, trunc, phi.proto(), "q");
    Series<C> pw = Series<C>::constant(Ring<C>::one(phi.proto()), trunc, phi.var());
    for (long n = 1; n < trunc; ++n) {
        pw = (pw * phi).truncated(trunc);
        h.set(n, Ring<C>::scale(pw.coeff(n - 1), rat(1, n)));
    }
    return h;
}

// [q^n] dh/dq = [x^n] g(x)^{n+1} for q = h/g(h).
template <class C>
Series<C> p_oracle(const Series<C>& g, long trunc) {
    Series<C> pw = g.truncated(trunc);
    Series<C> out = Series<C>::zeroes(0, trunc, g.proto(), "q");
    for (long n = 0; n < trunc; ++n) {
        out.set(n, pw.coeff(n));
        pw = (pw * g).truncated(trunc);
    }
    return out;
}

// [q^n] P_ell = [x^n] (ell x / g(ell x)) g(x)^{n+1}.
template <class C>
Series<C> p_ell_oracle(const Series<C>& g, long ell, long trunc) {
    Series<C> gl = rescale_arg(g.truncated(trunc), Rat(ell));
    Series<C> front = (Series<C>::variable(trunc, g.proto(), g.var()).scale(Rat(ell)) / gl)
                          .truncated(trunc);
    Series<C> pw = (front * g).truncated(trunc);
    Series<C> out = Series<C>::zeroes(0, trunc, g.proto(), "q");
    for (long n = 0; n < trunc; ++n) {
        out.set(n, pw.coeff(n));
        pw = (pw * g).truncated(trunc);
    }
    return out;
}

} // namespace quot
