#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "quot/series.hpp"

namespace quot {

// Polynomial in an indeterminate z whose coefficients are Series; ascending
// z-degree.
template <class C>
using ZPoly = std::vector<Series<C>>;

// Monic degree-N block: p(z) = z^N + e_1 z^{N-1} + ... + e_N. e[i] is e_{i+1}.
template <class C>
struct MonicSeriesPoly {
    long N = 0;
    std::vector<Series<C>> e;

    // Coefficient of z^k (k <= N).
    Series<C> zcoeff(long k, long T) const {
        if (k == N) {
            Series<C> one = Series<C>::constant(Ring<C>::one(proto()), T);
            return one;
        }
        return e[static_cast<std::size_t>(N - 1 - k)];
    }
    const C& proto() const { return e.front().proto(); }
    long trunc() const {
        long T = e.front().trunc();
        for (const auto& s : e)
            T = std::min(T, s.trunc());
        return T;
    }
    // p evaluated at a scalar of the coefficient ring (e.g. z = 1).
    Series<C> eval_const(const C& c) const {
        long T = trunc();
        Series<C> acc = Series<C>::constant(Ring<C>::one(proto()), T);
        for (long i = 0; i < N; ++i)
            acc = acc.scale_c(c) + e[static_cast<std::size_t>(i)].truncated(T);
        return acc;
    }
    // d/dz as a ZPoly of degree N-1.
    ZPoly<C> z_derivative() const {
        long T = trunc();
        ZPoly<C> d;
        for (long k = 1; k <= N; ++k)
            d.push_back(zcoeff(k, T).truncated(T).scale(Rat(k)));
        return d;
    }
};

// Exact linear solve over the coefficient ring; pivots must be units (the
// local-ring condition of the factorization Claim).
template <class C>
std::vector<C> solve_linear_unit(std::vector<std::vector<C>> M, std::vector<C> rhs) {
    const std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t row = col; row < n; ++row)
            if (Ring<C>::is_unit(M[row][col])) {
                piv = row;
                break;
            }
        if (piv == n)
            throw NonUnitResultant("linear solve: no unit pivot in column " +
                                   std::to_string(col));
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        C inv = Ring<C>::inv(M[col][col]);
        for (std::size_t j = col; j < n; ++j)
            M[col][j] = M[col][j] * inv;
        rhs[col] = rhs[col] * inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || Ring<C>::is_zero(M[row][col]))
                continue;
            C f = M[row][col];
            for (std::size_t j = col; j < n; ++j)
                M[row][j] = M[row][j] - f * M[col][j];
            rhs[row] = rhs[row] - f * rhs[col];
        }
    }
    return rhs;
}

namespace detail {

// Exact division of constant-coefficient polynomials a / b (b monic-leading or
// unit-leading); remainder must vanish.
template <class C>
std::vector<C> exact_poly_div(std::vector<C> a, const std::vector<C>& b) {
    while (!a.empty() && Ring<C>::is_zero(a.back()))
        a.pop_back();
    std::vector<C> bb = b;
    while (!bb.empty() && Ring<C>::is_zero(bb.back()))
        bb.pop_back();
    if (bb.empty())
        throw DegreeMismatch("division by zero polynomial");
    if (a.size() < bb.size())
        throw NonUnitResultant("initial factor does not divide G(q=0)");
    if (!Ring<C>::is_unit(bb.back()))
        throw NonUnitResultant("initial factor has non-unit leading coefficient");
    C lead_inv = Ring<C>::inv(bb.back());
    std::vector<C> q(a.size() - bb.size() + 1, Ring<C>::zero(bb.back()));
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        C coef = a[k + bb.size() - 1] * lead_inv;
        q[k] = coef;
        for (std::size_t i = 0; i < bb.size(); ++i)
            a[k + i] = a[k + i] - coef * bb[i];
    }
    for (const auto& c : a)
        if (!Ring<C>::is_zero(c))
            throw NonUnitResultant("initial factor does not divide G(q=0) exactly");
    return q;
}

} // namespace detail

// Order-by-order factorization G = p * h with p monic of degree N and
// p|_{q=0} = g0. The correction at each q-order solves the Sylvester-style
// system (dp, dh) -> dp*h0 + g0*dh, which is invertible exactly when
// Res(g0, h0) is a unit.
template <class C>
std::pair<MonicSeriesPoly<C>, ZPoly<C>> hensel_factor(const ZPoly<C>& G, long N,
                                                      const std::vector<C>& g0) {
    if (G.empty())
        throw DegreeMismatch("hensel_factor: empty polynomial");
    const long D = static_cast<long>(G.size()) - 1;
    const long r = D - N;
    if (N < 1 || r < 0 || static_cast<long>(g0.size()) != N + 1)
        throw DegreeMismatch("hensel_factor: degree bookkeeping (D=" + std::to_string(D) +
                             ", N=" + std::to_string(N) + ")");
    if (!Ring<C>::is_unit(g0.back()))
        throw NonUnitResultant("hensel_factor: g0 not monic/unit-leading");
    long T = G[0].trunc();
    for (const auto& s : G) {
        T = std::min(T, s.trunc());
        for (long n = s.valuation(); n < 0; ++n)
            if (!Ring<C>::is_zero(s.coeff(n)))
                throw DegreeMismatch("hensel_factor: negative-valuation coefficient");
    }
    const C proto = Ring<C>::zero(G[0].proto());

    // q=0 layer and the cofactor's initial value.
    std::vector<C> G0;
    for (const auto& s : G)
        G0.push_back(s.valuation() <= 0 ? s.coeff(0) : proto);
    std::vector<C> h0 = detail::exact_poly_div(G0, g0);
    h0.resize(static_cast<std::size_t>(r + 1), proto);

    // Normalize p to be monic: divide g0 through by its leading unit.
    C glead_inv = Ring<C>::inv(g0.back());
    std::vector<C> p0(g0);
    for (auto& c : p0)
        c = c * glead_inv;
    for (auto& c : h0)
        c = c * g0.back();

    // Sylvester-style matrix: rows = z-degree 0..D, columns = unknowns
    // (dp_0..dp_{N-1}, dh_0..dh_r).
    const std::size_t dim = static_cast<std::size_t>(D + 1);
    std::vector<std::vector<C>> M(dim, std::vector<C>(dim, proto));
    for (long i = 0; i < N; ++i)
        for (long d = 0; d <= r; ++d)
            M[static_cast<std::size_t>(i + d)][static_cast<std::size_t>(i)] =
                M[static_cast<std::size_t>(i + d)][static_cast<std::size_t>(i)] +
                h0[static_cast<std::size_t>(d)];
    for (long j = 0; j <= r; ++j)
        for (long d = 0; d <= N; ++d)
            M[static_cast<std::size_t>(j + d)][static_cast<std::size_t>(N + j)] =
                M[static_cast<std::size_t>(j + d)][static_cast<std::size_t>(N + j)] +
                p0[static_cast<std::size_t>(d)];

    // Per-coefficient q-expansions: pc[i][m], hc[j][m].
    std::vector<std::vector<C>> pc(static_cast<std::size_t>(N + 1),
                                   std::vector<C>(static_cast<std::size_t>(T), proto));
    std::vector<std::vector<C>> hc(static_cast<std::size_t>(r + 1),
                                   std::vector<C>(static_cast<std::size_t>(T), proto));
    for (long i = 0; i <= N; ++i)
        pc[static_cast<std::size_t>(i)][0] = p0[static_cast<std::size_t>(i)];
    for (long j = 0; j <= r; ++j)
        hc[static_cast<std::size_t>(j)][0] = h0[static_cast<std::size_t>(j)];

    for (long m = 1; m < T; ++m) {
        std::vector<C> rhs(dim, proto);
        for (long d = 0; d <= D; ++d) {
            C acc = G[static_cast<std::size_t>(d)].coeff(m);
            for (long i = std::max(0L, d - r); i <= std::min<long>(N, d); ++i)
                for (long s = 0; s <= m; ++s) {
                    const C& pi = pc[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
                    const C& hj = hc[static_cast<std::size_t>(d - i)]
                                    [static_cast<std::size_t>(m - s)];
                    if (!Ring<C>::is_zero(pi) && !Ring<C>::is_zero(hj))
                        acc = acc - pi * hj;
                }
            rhs[static_cast<std::size_t>(d)] = acc;
        }
        std::vector<C> x = solve_linear_unit(M, rhs);
        for (long i = 0; i < N; ++i)
            pc[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] =
                x[static_cast<std::size_t>(i)];
        for (long j = 0; j <= r; ++j)
            hc[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
                x[static_cast<std::size_t>(N + j)];
    }

    MonicSeriesPoly<C> p;
    p.N = N;
    for (long i = N - 1; i >= 0; --i) { // e_1 is the z^{N-1} coefficient
        Series<C> s = Series<C>::zeroes(0, T, proto);
        for (long m = 0; m < T; ++m)
            s.set(m, pc[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]);
        p.e.push_back(s);
    }
    ZPoly<C> h;
    for (long j = 0; j <= r; ++j) {
        Series<C> s = Series<C>::zeroes(0, T, proto);
        for (long m = 0; m < T; ++m)
            s.set(m, hc[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)]);
        h.push_back(s);
    }
    return {p, h};
}

// Rational expression in one root symbol: z^{-zshift} * num(z)/den(z).
template <class C>
struct RootExpr {
    ZPoly<C> num, den;
    long zshift = 0;

    static RootExpr poly(ZPoly<C> n) {
        RootExpr r;
        r.num = std::move(n);
        r.den = {};
        return r;
    }
    RootExpr pow(long k) const;
    friend RootExpr operator*(const RootExpr& a, const RootExpr& b) {
        RootExpr r;
        r.num = zp_mul(a.num_or_one(), b.num_or_one());
        r.den = zp_mul(a.den_or_one(), b.den_or_one());
        r.zshift = a.zshift + b.zshift;
        return r;
    }
    ZPoly<C> num_or_one() const { return num; }
    ZPoly<C> den_or_one() const { return den; }

    static ZPoly<C> zp_mul(const ZPoly<C>& a, const ZPoly<C>& b) {
        if (a.empty())
            return b;
        if (b.empty())
            return a;
        long T = std::min(a[0].trunc(), b[0].trunc());
        for (const auto& s : a)
            T = std::min(T, s.trunc());
        for (const auto& s : b)
            T = std::min(T, s.trunc());
        const C proto = Ring<C>::zero(a[0].proto());
        ZPoly<C> out(a.size() + b.size() - 1, Series<C>::zeroes(0, T, proto));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = out[i + j] + (a[i] * b[j]).truncated(T).with_valuation(0);
        return out;
    }
};

template <class C>
RootExpr<C> RootExpr<C>::pow(long k) const {
    RootExpr<C> acc; // empty num/den mean 1
    if (k == 0)
        return acc;
    RootExpr<C> base = *this;
    if (k < 0) {
        std::swap(base.num, base.den);
        base.zshift = -base.zshift;
        k = -k;
    }
    acc = base;
    for (long i = 1; i < k; ++i)
        acc = acc * base;
    return acc;
}

// Quotient ring F[z]/(p): dense elements, companion-matrix traces/norms,
// Cramer inverses. N is small (<= 6) by design.
template <class C>
class QuotientRing {
  public:
    using Elem = std::vector<Series<C>>; // coefficients of z^0..z^{N-1}

    explicit QuotientRing(const MonicSeriesPoly<C>& p)
        : p_(p), N_(p.N), T_(p.trunc()), proto_(Ring<C>::zero(p.proto())) {}

    long N() const { return N_; }
    long trunc() const { return T_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(N_), zser()); }
    Elem one() const {
        Elem e = zero();
        e[0] = Series<C>::constant(Ring<C>::one(proto_), T_);
        return e;
    }
    Elem scalar(const Series<C>& s) const {
        Elem e = zero();
        e[0] = s;
        return e;
    }

    Elem reduce(const ZPoly<C>& poly) const {
        std::vector<Series<C>> c;
        for (const auto& s : poly)
            c.push_back(s);
        if (c.empty())
            return zero();
        while (static_cast<long>(c.size()) > N_) {
            Series<C> top = c.back();
            c.pop_back();
            const long k = static_cast<long>(c.size()); // degree after pop is k-1; top was z^k
            for (long i = 1; i <= N_; ++i) {
                long idx = k - i;
                c[static_cast<std::size_t>(idx)] =
                    c[static_cast<std::size_t>(idx)] -
                    top * p_.e[static_cast<std::size_t>(i - 1)];
            }
        }
        Elem e = zero();
        for (std::size_t i = 0; i < c.size(); ++i)
            e[i] = e[i] + c[i];
        return e;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        ZPoly<C> prod(static_cast<std::size_t>(2 * N_ - 1), zser());
        for (long i = 0; i < N_; ++i)
            for (long j = 0; j < N_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    prod[static_cast<std::size_t>(i + j)] +
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        return reduce(prod);
    }

    Elem mul_z(const Elem& a) const {
        Elem b = zero();
        const Series<C>& top = a[static_cast<std::size_t>(N_ - 1)];
        for (long k = 0; k < N_; ++k) {
            Series<C> v = top * p_.e[static_cast<std::size_t>(N_ - 1 - k)];
            b[static_cast<std::size_t>(k)] =
                (k > 0 ? a[static_cast<std::size_t>(k - 1)] - v : -v);
        }
        return b;
    }

    // z is invertible in the Laurent sense: e_N = q * (unit).
    Elem z_inverse() const {
        const Series<C>& eN = p_.e[static_cast<std::size_t>(N_ - 1)];
        Elem b = zero();
        if (N_ == 1)
            return scalar(Series<C>::constant(Ring<C>::one(proto_), T_) / (-eN));
        for (long k = 0; k < N_; ++k) {
            // -(z^{N-1} + e_1 z^{N-2} + ... + e_{N-1}) / e_N
            Series<C> num = (k == N_ - 1)
                                ? Series<C>::constant(Ring<C>::one(proto_), T_)
                                : p_.e[static_cast<std::size_t>(N_ - 2 - k)];
            b[static_cast<std::size_t>(k)] = -(num / eN);
        }
        return b;
    }

    Series<C> trace(const Elem& a) const {
        Elem cur = a;
        Series<C> tr = cur[0];
        for (long j = 1; j < N_; ++j) {
            cur = mul_z(cur);
            tr = tr + cur[static_cast<std::size_t>(j)];
        }
        return tr;
    }

    Series<C> norm(const Elem& a) const { return det(mult_matrix(a)); }

    Elem inverse(const Elem& a) const {
        auto M = mult_matrix(a);
        Series<C> d = det(M);
        if (d.order() == d.trunc())
            throw NonInvertibleDenominator("norm vanishes on the exact window");
        Elem x = zero();
        for (long i = 0; i < N_; ++i) {
            auto Mi = M;
            for (long row = 0; row < N_; ++row)
                Mi[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)] =
                    row == 0 ? Series<C>::constant(Ring<C>::one(proto_), T_) : zser();
            x[static_cast<std::size_t>(i)] = det(Mi) / d;
        }
        return x;
    }

    Elem pow(Elem a, long k) const {
        if (k < 0) {
            a = inverse(a);
            k = -k;
        }
        Elem acc = one();
        while (k > 0) {
            if (k & 1)
                acc = mul(acc, a);
            k >>= 1;
            if (k)
                a = mul(a, a);
        }
        return acc;
    }

    Elem eval_expr(const RootExpr<C>& R) const {
        Elem e = R.num.empty() ? one() : reduce(R.num);
        if (!R.den.empty()) {
            try {
                e = mul(e, inverse(reduce(R.den)));
            } catch (const DivisionByNonUnit& ex) {
                throw NonInvertibleDenominator(ex.what());
            }
        }
        if (R.zshift > 0)
            e = mul(e, pow(z_inverse(), R.zshift));
        else if (R.zshift < 0)
            for (long i = 0; i < -R.zshift; ++i)
                e = mul_z(e);
        return e;
    }

  private:
    Series<C> zser() const { return Series<C>::zeroes(0, T_, proto_); }

    std::vector<std::vector<Series<C>>> mult_matrix(const Elem& a) const {
        std::vector<std::vector<Series<C>>> M(
            static_cast<std::size_t>(N_),
            std::vector<Series<C>>(static_cast<std::size_t>(N_), zser()));
        Elem cur = a;
        for (long j = 0; j < N_; ++j) {
            if (j > 0)
                cur = mul_z(cur);
            for (long i = 0; i < N_; ++i)
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    cur[static_cast<std::size_t>(i)];
        }
        return M;
    }

    // Division-free Leibniz determinant; n <= 6 keeps this cheap and avoids
    // any pivoting concerns over the series ring.
    Series<C> det(const std::vector<std::vector<Series<C>>>& M) const {
        const std::size_t n = M.size();
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Series<C> acc = zser().with_valuation(std::min(0L, min_val(M) * static_cast<long>(n)));
        bool first = true;
        do {
            int sign = perm_sign(perm);
            Series<C> term = M[0][perm[0]];
            for (std::size_t i = 1; i < n; ++i)
                term = term * M[i][perm[i]];
            term = term.scale(Rat(sign));
            acc = first ? term : acc + term;
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    }

    static long min_val(const std::vector<std::vector<Series<C>>>& M) {
        long v = 0;
        for (const auto& row : M)
            for (const auto& s : row)
                v = std::min(v, s.valuation());
        return v;
    }

    static int perm_sign(const std::vector<std::size_t>& p) {
        int s = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j])
                    s = -s;
        return s;
    }

    MonicSeriesPoly<C> p_;
    long N_, T_;
    C proto_;
};

// Sum of R over the N roots of p: trace of the multiplication operator.
template <class C>
Series<C> trace_eval(const MonicSeriesPoly<C>& p, const RootExpr<C>& R) {
    QuotientRing<C> Q(p);
    return Q.trace(Q.eval_expr(R));
}

// Product of R over the N roots: determinant of the multiplication operator.
// Multiplicativity lets us avoid inverting: norm(num)/norm(den)/norm(z)^shift.
template <class C>
Series<C> norm_eval(const MonicSeriesPoly<C>& p, const RootExpr<C>& R) {
    QuotientRing<C> Q(p);
    Series<C> out = R.num.empty()
                        ? Series<C>::constant(Ring<C>::one(p.proto()), p.trunc())
                        : Q.norm(Q.reduce(R.num));
    if (!R.den.empty()) {
        Series<C> dn = Q.norm(Q.reduce(R.den));
        if (dn.order() == dn.trunc())
            throw NonInvertibleDenominator("norm_eval: denominator norm vanishes");
        out = out / dn;
    }
    if (R.zshift != 0) {
        // norm(z) = (-1)^N e_N
        Series<C> nz = p.e.back().scale(Rat(p.N % 2 ? -1 : 1));
        Series<C> one = Series<C>::constant(Ring<C>::one(p.proto()), p.trunc());
        out = out * (one / nz).pow_int(R.zshift);
    }
    return out;
}

struct Coupling {
    Rat a, b, c;        // a + b*z + c*w
    bool discriminant;  // prod_{i != j}(z_i - z_j) over a single block
    static Coupling z_minus_w() { return {Rat(0), Rat(1), Rat(-1), false}; }
    static Coupling affine(Rat a_, Rat b_, Rat c_) {
        return {std::move(a_), std::move(b_), std::move(c_), false};
    }
    static Coupling discr() { return {Rat(0), Rat(1), Rat(-1), true}; }
};

// prod over root pairs of the coupling; discriminant mode computes
// prod_{i != j}(z_i - z_j) = norm_p(p'(z)).
template <class C>
Series<C> resultant_pair(const MonicSeriesPoly<C>& p, const MonicSeriesPoly<C>& s,
                         const Coupling& cpl) {
    long T = std::min(p.trunc(), s.trunc());
    const C proto = Ring<C>::zero(p.proto());
    if (cpl.discriminant)
        return norm_eval(p, RootExpr<C>::poly(p.z_derivative()));
    if (sgn(cpl.c) == 0) {
        // prod_{i,j}(a + b z_i) = norm_p(a + b z)^{deg s}
        ZPoly<C> lin = {Series<C>::constant(Ring<C>::scale(Ring<C>::one(proto), cpl.a), T),
                        Series<C>::constant(Ring<C>::scale(Ring<C>::one(proto), cpl.b), T)};
        return norm_eval(p, RootExpr<C>::poly(lin)).pow_int(s.N);
    }
    // Q(z) = prod_j (a + b z + c w_j) = c^r (-1)^r s(-(a + b z)/c), s monic.
    const long r = s.N;
    Series<C> one = Series<C>::constant(Ring<C>::one(proto), T);
    ZPoly<C> arg = {one.scale(-cpl.a / cpl.c), one.scale(-cpl.b / cpl.c)};
    // Horner from s's (monic) top coefficient down to its constant term.
    ZPoly<C> acc = {one};
    for (long k = r - 1; k >= 0; --k) {
        acc = RootExpr<C>::zp_mul(acc, arg);
        acc[0] = acc[0] + s.zcoeff(k, T);
    }
    Rat scalefac = rat_pow(cpl.c, r) * Rat(r % 2 ? -1 : 1);
    for (auto& sc : acc)
        sc = sc.scale(scalefac);
    return norm_eval(p, RootExpr<C>::poly(acc));
}

// Lift the unique series root of G(q, z) = 0 with z(0) = initial; Newton
// iteration, quadratic convergence.
template <class C>
Series<C> newton_root(const ZPoly<C>& G, const C& initial) {
    if (G.size() < 2)
        throw DegreeMismatch("newton_root: constant polynomial");
    long T = G[0].trunc();
    for (const auto& s : G)
        T = std::min(T, s.trunc());
    const C proto = Ring<C>::zero(G[0].proto());

    auto horner = [&](const ZPoly<C>& P, const Series<C>& z) {
        Series<C> acc = P.back().truncated(T);
        for (long k = static_cast<long>(P.size()) - 2; k >= 0; --k)
            acc = (acc * z).truncated(T).with_valuation(0) +
                  P[static_cast<std::size_t>(k)].truncated(T);
        return acc;
    };
    ZPoly<C> dG;
    for (std::size_t k = 1; k < G.size(); ++k)
        dG.push_back(G[k].truncated(T).scale(Rat(static_cast<long>(k))));

    Series<C> z = Series<C>::constant(initial, T);
    Series<C> j0 = horner(dG, z);
    if (j0.valuation() > 0 || !Ring<C>::is_unit(j0.coeff(0)))
        throw SingularJacobian("newton_root: dG/dz not a unit at the initial value");
    long correct = 1;
    while (correct < T) {
        Series<C> F = horner(G, z);
        Series<C> J = horner(dG, z);
        z = (z - F / J).truncated(T).with_valuation(0);
        correct *= 2;
    }
    return z;
}

// Closed-form coefficients a_{n,k} of the rank-one implicit solution.
inline Rat lemma_uv_coeffs(long n, long k) {
    if (n < 1 || k < 1)
        throw Error("lemma_uv_coeffs: need n,k >= 1");
    Rat sign(((n + k + 1) % 2 == 0) ? 1 : -1);
    return sign * binomial(n + k, k - 1) * binomial(n, k) / Rat(n);
}

} // namespace quot
