#include "quot/rationality.hpp"

namespace quot {

long poly_degree(const Poly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (sgn(p[static_cast<std::size_t>(i)]) != 0)
            return i;
    return -1;
}

Poly poly_trim(Poly p) {
    p.resize(static_cast<std::size_t>(poly_degree(p) + 1));
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return poly_trim(std::move(c));
}

namespace {

// Remainder of a by monic-normalized b (b scaled so its leading coeff is 1).
Poly poly_rem(Poly a, const Poly& b) {
    long db = poly_degree(b);
    Rat lead = b[static_cast<std::size_t>(db)];
    long da = poly_degree(a);
    while (da >= db) {
        Rat f = a[static_cast<std::size_t>(da)] / lead;
        for (long i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
        da = poly_degree(a);
    }
    return poly_trim(std::move(a));
}

// Exact quotient when b divides a.
Poly poly_div_exact(Poly a, const Poly& b) {
    long db = poly_degree(b), da = poly_degree(a);
    if (da < 0)
        return {};
    Poly q(static_cast<std::size_t>(da - db + 1), Rat(0));
    Rat lead = b[static_cast<std::size_t>(db)];
    while (da >= db) {
        Rat f = a[static_cast<std::size_t>(da)] / lead;
        q[static_cast<std::size_t>(da - db)] = f;
        for (long i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
        da = poly_degree(a);
    }
    return poly_trim(std::move(q));
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a[a.size() - 1];
        for (Rat& c : a)
            c /= lead;
    }
    return a;
}

Series<Rat> expand(const RationalFn& fn, long trunc) {
    long T = trunc - fn.shift;
    if (T < 1)
        throw TruncationUnderflow("expand: window below the Laurent shift");
    Series<Rat> num = Series<Rat>::zeroes(0, T, Rat(0));
    Series<Rat> den = Series<Rat>::zeroes(0, T, Rat(0));
    for (long i = 0; i < T; ++i) {
        if (i < static_cast<long>(fn.num.size()))
            num.set(i, fn.num[static_cast<std::size_t>(i)]);
        if (i < static_cast<long>(fn.den.size()))
            den.set(i, fn.den[static_cast<std::size_t>(i)]);
    }
    return (num / den).truncated(T).with_valuation(0).shifted(fn.shift);
}

FitResult fit_rational(const FitRequest& req) {
    const Series<Rat>& s0 = req.series;
    long shift = s0.valuation();
    long W = s0.trunc() - shift; // available coefficients, indexed 0..W-1
    if (W < req.degNum + req.degDen + 1 + req.surplus)
        throw InsufficientData("fit window " + std::to_string(W) + " < bounds (" +
                               std::to_string(req.degNum) + "," + std::to_string(req.degDen) +
                               ") + 1 + surplus " + std::to_string(req.surplus));
    std::vector<Rat> s(static_cast<std::size_t>(W));
    for (long n = 0; n < W; ++n)
        s[static_cast<std::size_t>(n)] = s0.coeff(n + shift);

    FitResult out;
    out.boundsNum = req.degNum;
    out.boundsDen = req.degDen;

    for (long dd = 0; dd <= req.degDen; ++dd)
        for (long dn = 0; dn <= req.degNum; ++dn) {
            // den(q) S(q) = num(q) with den(0) = 1; unknowns d_1..d_dd from
            //   sum_{j=0}^{dd} d_j s_{n-j} = 0  for all n in (dn, W).
            long rows = W - 1 - dn;
            std::vector<std::vector<Rat>> M; // [row | rhs]
            for (long n = dn + 1; n < W; ++n) {
                std::vector<Rat> row(static_cast<std::size_t>(dd + 1), Rat(0));
                for (long j = 1; j <= dd; ++j)
                    if (n - j >= 0)
                        row[static_cast<std::size_t>(j - 1)] = s[static_cast<std::size_t>(n - j)];
                row[static_cast<std::size_t>(dd)] = -s[static_cast<std::size_t>(n)];
                M.push_back(std::move(row));
            }
            // Gaussian elimination; inconsistency means no fit at these degrees.
            std::vector<long> pivot_col;
            long r = 0;
            for (long c = 0; c < dd && r < rows; ++c) {
                long pr = -1;
                for (long i = r; i < rows; ++i)
                    if (sgn(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                        pr = i;
                        break;
                    }
                if (pr < 0)
                    continue;
                std::swap(M[static_cast<std::size_t>(r)], M[static_cast<std::size_t>(pr)]);
                Rat inv = Rat(1) / M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                for (long c2 = c; c2 <= dd; ++c2)
                    M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] *= inv;
                for (long i = 0; i < rows; ++i) {
                    if (i == r)
                        continue;
                    Rat f = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                    if (sgn(f) == 0)
                        continue;
                    for (long c2 = c; c2 <= dd; ++c2)
                        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)] -=
                            f * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)];
                }
                pivot_col.push_back(c);
                ++r;
            }
            bool consistent = true;
            for (long i = r; i < rows; ++i)
                if (sgn(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(dd)]) != 0) {
                    consistent = false;
                    break;
                }
            if (!consistent)
                continue;
            Poly den(static_cast<std::size_t>(dd + 1), Rat(0));
            den[0] = Rat(1);
            for (long i = 0; i < r; ++i)
                den[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)] + 1)] =
                    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(dd)];
            den = poly_trim(std::move(den));
            // numerator = den * S truncated to degree dn; the solved equations
            // force the product to vanish beyond dn through the full window.
            Poly num(static_cast<std::size_t>(dn + 1), Rat(0));
            for (long n = 0; n <= dn; ++n)
                for (long j = 0; j <= std::min<long>(n, poly_degree(den)); ++j)
                    num[static_cast<std::size_t>(n)] +=
                        den[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(n - j)];
            num = poly_trim(std::move(num));
            Poly g = num.empty() ? Poly{} : poly_gcd(num, den);
            if (poly_degree(g) > 0) {
                num = poly_div_exact(std::move(num), g);
                den = poly_div_exact(std::move(den), g);
            }
            Rat d0 = den[0];
            for (Rat& c : num)
                c /= d0;
            for (Rat& c : den)
                c /= d0;
            out.found = true;
            out.fn = RationalFn{std::move(num), std::move(den), shift};
            return out;
        }
    return out;
}

long pole_order_at_one(const RationalFn& fn) {
    Poly d = fn.den;
    Poly oneMinusQ = {Rat(1), Rat(-1)};
    long k = 0;
    auto at_one = [](const Poly& p) -> Rat {
        Rat v(0);
        for (const Rat& c : p)
            v += c;
        return v;
    };
    while (poly_degree(d) >= 1 && sgn(at_one(d)) == 0) {
        d = poly_div_exact(std::move(d), oneMinusQ);
        ++k;
    }
    return k;
}

bool all_poles_at_one(const RationalFn& fn) {
    Poly d = fn.den;
    Poly oneMinusQ = {Rat(1), Rat(-1)};
    auto at_one = [](const Poly& p) -> Rat {
        Rat v(0);
        for (const Rat& c : p)
            v += c;
        return v;
    };
    while (poly_degree(d) >= 1 && sgn(at_one(d)) == 0)
        d = poly_div_exact(std::move(d), oneMinusQ);
    return poly_degree(d) <= 0;
}

} // namespace quot
