#pragma once

#include <string>
#include <vector>

#include "quot/errors.hpp"
#include "quot/jet.hpp"
#include "quot/rational.hpp"

namespace quot {

// Truncated Laurent series in one variable over an exact coefficient ring C
// (Rat or Jet). Coefficients with exponent in [valuation, trunc) are exact;
// everything below valuation is exactly zero. Operations propagate trunc
// pessimistically and never fabricate coefficients.
template <class C>
class Series {
  public:
    using R = Ring<C>;

    Series(std::string var, long val, long trunc, std::vector<C> coeffs, C proto)
        : var_(std::move(var)), val_(val), trunc_(trunc), c_(std::move(coeffs)),
          zero_(R::zero(proto)) {
        if (trunc_ <= val_)
            throw TruncationUnderflow("series window [" + std::to_string(val_) + "," +
                                      std::to_string(trunc_) + ")");
        c_.resize(static_cast<std::size_t>(trunc_ - val_), zero_);
    }

    static Series zeroes(long val, long trunc, const C& proto, std::string var = "q") {
        return Series(std::move(var), val, trunc, {}, proto);
    }
    static Series constant(const C& value, long trunc, std::string var = "q") {
        Series s = zeroes(0, trunc, value, std::move(var));
        s.c_[0] = value;
        return s;
    }
    // The series variable itself, with given trunc.
    static Series variable(long trunc, const C& proto, std::string var = "q") {
        if (trunc < 2)
            throw TruncationUnderflow("variable needs trunc >= 2");
        Series s = zeroes(0, trunc, proto, std::move(var));
        s.c_[1] = R::one(proto);
        return s;
    }

    const std::string& var() const { return var_; }
    long valuation() const { return val_; }
    long trunc() const { return trunc_; }
    const C& proto() const { return zero_; }
    const std::vector<C>& raw_coeffs() const { return c_; }

    // Exact coefficient of q^n; zero below the window, error at/above trunc.
    const C& coeff(long n) const {
        if (n < val_)
            return zero_;
        if (n >= trunc_)
            throw TruncationUnderflow("coefficient q^" + std::to_string(n) +
                                      " beyond trunc " + std::to_string(trunc_));
        return c_[static_cast<std::size_t>(n - val_)];
    }

    // Smallest exponent with a nonzero stored coefficient, or trunc if none.
    long order() const {
        for (long n = val_; n < trunc_; ++n)
            if (!R::is_zero(coeff(n)))
                return n;
        return trunc_;
    }

    bool is_zero_window() const { return order() == trunc_; }

    Series truncated(long T) const {
        if (T >= trunc_)
            return *this;
        Series s = zeroes(val_, T, zero_, var_);
        for (long n = val_; n < T; ++n)
            s.set(n, coeff(n));
        return s;
    }

    // Multiply by q^k (k may be negative): pure window shift.
    Series shifted(long k) const {
        Series s = *this;
        s.val_ += k;
        s.trunc_ += k;
        return s;
    }

    // Extend the window downward with exact zeros (new_val <= valuation).
    Series with_valuation(long new_val) const {
        if (new_val >= val_)
            return *this;
        Series s = zeroes(new_val, trunc_, zero_, var_);
        for (long n = val_; n < trunc_; ++n)
            s.set(n, coeff(n));
        return s;
    }

    // Raise the valuation, dropping coefficients below new_val; they must be
    // exactly zero.
    Series restricted_above(long new_val) const {
        if (new_val <= val_)
            return *this;
        for (long n = val_; n < std::min(new_val, trunc_); ++n)
            if (!R::is_zero(coeff(n)))
                throw Error("restricted_above: dropping a nonzero coefficient");
        Series s = zeroes(new_val, trunc_, zero_, var_);
        for (long n = new_val; n < trunc_; ++n)
            s.set(n, coeff(n));
        return s;
    }

    void set(long n, C v) {
        if (n < val_ || n >= trunc_)
            throw Error("series set: exponent outside window");
        c_[static_cast<std::size_t>(n - val_)] = std::move(v);
    }

    Series operator-() const {
        Series s = *this;
        for (auto& x : s.c_)
            x = R::scale(x, Rat(-1));
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        long v = std::min(a.val_, b.val_), T = std::min(a.trunc_, b.trunc_);
        Series s = zeroes(v, T, a.zero_, a.var_);
        for (long n = v; n < T; ++n)
            s.set(n, a.coeff(n) + b.coeff(n));
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        long v = a.val_ + b.val_;
        long T = std::min(a.trunc_ + b.val_, b.trunc_ + a.val_);
        Series s = zeroes(v, T, a.zero_, a.var_);
        for (long i = a.val_; i < a.trunc_; ++i) {
            if (R::is_zero(a.coeff(i)))
                continue;
            for (long j = b.val_; j < b.trunc_ && i + j < T; ++j)
                s.set(i + j, s.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
        return s;
    }

    Series scale(const Rat& r) const {
        Series s = *this;
        for (auto& x : s.c_)
            x = R::scale(x, r);
        return s;
    }
    Series scale_c(const C& c) const {
        Series s = *this;
        for (auto& x : s.c_)
            x = x * c;
        return s;
    }

    friend Series operator/(const Series& a, const Series& b) {
        long k = b.order();
        if (k == b.trunc_)
            throw DivisionByNonUnit("divisor is zero on its exact window");
        const C& lead = b.coeff(k);
        if (!R::is_unit(lead))
            throw DivisionByNonUnit("divisor leading coefficient is not a unit");
        C ilead = R::inv(lead);
        long vq = a.val_ - k;
        long Tq = std::min(a.trunc_, a.val_ + (b.trunc_ - k)) - k;
        if (Tq <= vq)
            throw TruncationUnderflow("division leaves empty window");
        Series s = zeroes(vq, Tq, a.zero_, a.var_);
        for (long n = vq; n < Tq; ++n) {
            C acc = a.coeff(n + k);
            for (long m = vq; m < n; ++m)
                acc = acc - s.coeff(m) * b.coeff(n + k - m);
            s.set(n, acc * ilead);
        }
        return s;
    }

    Series pow_int(long e) const {
        if (e < 0) {
            Series inv = constant(R::one(zero_), trunc_ - val_, var_) / *this;
            return inv.pow_int(-e);
        }
        long relw = trunc_ - val_;
        Series acc = constant(R::one(zero_), relw, var_);
        Series base = *this;
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            base = (e >>= 1) ? base * base : base;
        }
        return acc;
    }

    // Exact equality on the common window (the only meaningful comparison for
    // truncated data); the common window must be nonempty.
    friend bool agree(const Series& a, const Series& b) {
        long v = std::min(a.val_, b.val_), T = std::min(a.trunc_, b.trunc_);
        if (T <= v)
            throw TruncationUnderflow("agree: empty common window");
        for (long n = v; n < T; ++n)
            if (!R::is_zero(a.coeff(n) - b.coeff(n)))
                return false;
        return true;
    }

    // First exponent (if any) in the common window where the two disagree.
    friend bool first_disagreement(const Series& a, const Series& b, long& where) {
        long v = std::min(a.val_, b.val_), T = std::min(a.trunc_, b.trunc_);
        for (long n = v; n < T; ++n)
            if (!R::is_zero(a.coeff(n) - b.coeff(n))) {
                where = n;
                return true;
            }
        return false;
    }

  private:
    std::string var_;
    long val_, trunc_;
    std::vector<C> c_;
    C zero_;
};

template <class C>
Series<C> derivative(const Series<C>& a) {
    long nv = a.valuation() == 0 ? 0 : a.valuation() - 1; // q^0 contributes nothing
    Series<C> s = Series<C>::zeroes(nv, a.trunc() - 1, a.proto(), a.var());
    for (long n = a.valuation(); n < a.trunc(); ++n)
        if (n != 0)
            s.set(n - 1, Ring<C>::scale(a.coeff(n), Rat(n)));
    return s;
}

template <class C>
Series<C> series_exp(const Series<C>& arg) {
    if (arg.valuation() <= 0 && !Ring<C>::is_zero(arg.coeff(0)))
        throw BadConstantTerm("exp requires zero constant term");
    if (arg.valuation() < 0)
        for (long n = arg.valuation(); n < 0; ++n)
            if (!Ring<C>::is_zero(arg.coeff(n)))
                throw BadConstantTerm("exp of a Laurent series");
    Series<C> a = arg.valuation() < 1 ? arg.restricted_above(1) : arg;
    long T = a.trunc();
    if (T < 1)
        throw TruncationUnderflow("exp window");
    Series<C> one = Series<C>::constant(Ring<C>::one(a.proto()), T, a.var());
    Series<C> sum = one, pw = one;
    for (long k = 1; k < T; ++k) {
        pw = (pw * a).truncated(T).with_valuation(0);
        pw = pw.scale(Rat(1, k));
        sum = sum + pw;
    }
    return sum;
}

template <class C>
Series<C> series_log(const Series<C>& a) {
    if (a.valuation() > 0 || !Ring<C>::is_zero(a.coeff(0) - Ring<C>::one(a.proto())))
        throw BadConstantTerm("log requires constant term 1");
    for (long n = a.valuation(); n < 0; ++n)
        if (!Ring<C>::is_zero(a.coeff(n)))
            throw BadConstantTerm("log of a Laurent series");
    long T = a.trunc();
    Series<C> u =
        (a - Series<C>::constant(Ring<C>::one(a.proto()), T, a.var())).restricted_above(1);
    Series<C> sum = Series<C>::zeroes(0, T, a.proto(), a.var());
    Series<C> pw = Series<C>::constant(Ring<C>::one(a.proto()), T, a.var());
    for (long k = 1; k < T; ++k) {
        pw = (pw * u).truncated(T).with_valuation(0);
        sum = sum + pw.scale(Rat(1, k) * Rat((k % 2) ? 1 : -1));
    }
    return sum;
}

// Substitute `inner` (valuation >= 1, unit linear term when outer is
// Laurent) for the variable of `outer`.
template <class C>
Series<C> compose(const Series<C>& outer, const Series<C>& inner_arg) {
    Series<C> inner = inner_arg.valuation() < 1 ? inner_arg.restricted_above(1) : inner_arg;
    long vo = outer.valuation();
    long T = std::min(inner.trunc(), outer.trunc());
    // Horner on the coefficient list shifted by vo, then one power of inner.
    Series<C> r = Series<C>::constant(outer.coeff(outer.trunc() - 1), T, inner.var());
    for (long n = outer.trunc() - 2; n >= vo; --n) {
        r = (r * inner).truncated(T).with_valuation(0) +
            Series<C>::constant(outer.coeff(n), T, inner.var());
    }
    if (vo != 0)
        r = r * inner.pow_int(vo);
    return r;
}

// Coefficientwise q -> s*q for a scalar s (used for the (-1)^N q arguments).
template <class C>
Series<C> rescale_arg(const Series<C>& a, const Rat& s) {
    Series<C> out = Series<C>::zeroes(a.valuation(), a.trunc(), a.proto(), a.var());
    for (long n = a.valuation(); n < a.trunc(); ++n)
        out.set(n, Ring<C>::scale(a.coeff(n), rat_pow(s, n)));
    return out;
}

// Extract the Series<Rat> coefficient of a fixed jet monomial.
Series<Rat> extract_monomial(const Series<Jet>& a, const std::vector<int>& exps);

// Embed a Rat-series into the jet ring over the given context.
Series<Jet> lift_to_jets(const Series<Rat>& a, const JetCtx& ctx);

// Evaluate all jet variables at numeric values, coefficient by coefficient.
Series<Rat> eval_jets(const Series<Jet>& a, const std::vector<Rat>& values);

} // namespace quot
